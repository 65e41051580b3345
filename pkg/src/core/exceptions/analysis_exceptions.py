"""
Exceptions raised by the statistical and feature operations.
"""

from core.exceptions.base_exceptions import AnalysisException, ExceptionCode


class InvalidCountsError(AnalysisException):
    """Raised when bounce counts are not 0 <= n <= N."""

    def __init__(self, n: int, total: int):
        super().__init__(
            message=f"Invalid counts n={n}, N={total}",
            code=ExceptionCode.INVALID_COUNTS,
            details={"n": n, "N": total},
        )


class DegenerateVarianceError(AnalysisException):
    """Raised when a class has zero variance or too few classes are given."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(
            message=message,
            code=ExceptionCode.DEGENERATE_VARIANCE,
            details=details or {},
        )


class InvalidDofError(AnalysisException):
    """Raised on a non-positive number of degrees of freedom."""

    def __init__(self, dof):
        super().__init__(
            message=f"Degrees of freedom must be >= 1, got {dof}",
            code=ExceptionCode.INVALID_DOF,
            details={"dof": dof},
        )


class SeriesTooShortError(AnalysisException):
    """Raised when a series is too short for the requested DFA windows."""

    def __init__(self, length: int, required: int):
        super().__init__(
            message=f"Series of length {length} too short, {required} required",
            code=ExceptionCode.SERIES_TOO_SHORT,
            details={"length": length, "required": required},
        )


class WindowRangeInvalidError(AnalysisException):
    """Raised on an unusable DFA window range."""

    def __init__(self, window_min: int, window_max: int, n_windows: int):
        super().__init__(
            message=(
                f"Invalid DFA windows min={window_min}, max={window_max}, "
                f"n={n_windows}"
            ),
            code=ExceptionCode.WINDOW_RANGE_INVALID,
            details={
                "window_min": window_min,
                "window_max": window_max,
                "n_windows": n_windows,
            },
        )


class TooFewBinsError(AnalysisException):
    """Raised when a histogram has fewer than three usable bins."""

    def __init__(self, usable: int):
        super().__init__(
            message=f"Power-law fit needs >= 3 positive bins, got {usable}",
            code=ExceptionCode.TOO_FEW_BINS,
            details={"usable_bins": usable},
        )


class EmptySamplesError(AnalysisException):
    """Raised when a histogram is requested for no samples."""

    def __init__(self):
        super().__init__(
            message="Cannot build a histogram of zero samples",
            code=ExceptionCode.EMPTY_SAMPLES,
        )


class PathMismatchError(AnalysisException):
    """Raised when trials point outside the price path they claim to come from."""

    def __init__(self, index: int, length: int):
        super().__init__(
            message=f"Trial index {index} outside series of length {length}",
            code=ExceptionCode.PATH_MISMATCH,
            details={"index": index, "length": length},
        )
