"""
Exceptions raised while ingesting tick data or generating surrogate series.
"""

from typing import Optional

from core.exceptions.base_exceptions import DataException, ExceptionCode


class TickFileNotFoundError(DataException):
    """Raised when a tick file does not exist."""

    def __init__(self, path: str):
        self.path = path
        super().__init__(
            message=f"Tick file not found: {path}",
            code=ExceptionCode.FILE_NOT_FOUND,
            details={"path": path},
        )


class TickParseError(DataException):
    """Raised when a tick file row cannot be parsed."""

    def __init__(self, line: int, reason: str, path: Optional[str] = None):
        self.line = line
        super().__init__(
            message=f"Cannot parse line {line}: {reason}",
            code=ExceptionCode.PARSE_ERROR,
            details={"line": line, "reason": reason, "path": path},
        )


class NonMonotoneTimestampsError(DataException):
    """Raised when a tick file row goes back in time."""

    def __init__(self, line: int, path: Optional[str] = None):
        self.line = line
        super().__init__(
            message=f"Timestamp decreases at line {line}",
            code=ExceptionCode.NON_MONOTONE_TIMESTAMPS,
            details={"line": line, "path": path},
        )


class TooShortError(DataException):
    """Raised when a series has fewer points than an operation needs."""

    def __init__(self, length: int, required: int, what: str = "series"):
        super().__init__(
            message=f"{what} has {length} points, at least {required} required",
            code=ExceptionCode.TOO_SHORT,
            details={"length": length, "required": required, "what": what},
        )


class ScaleTooLargeError(DataException):
    """Raised when resampling would leave fewer than two samples."""

    def __init__(self, scale: int, samples: int):
        super().__init__(
            message=f"Scale {scale} leaves {samples} samples, at least 2 required",
            code=ExceptionCode.SCALE_TOO_LARGE,
            details={"scale": scale, "samples": samples},
        )


class InvalidHurstError(DataException):
    """Raised when a Hurst exponent is outside (0, 1)."""

    def __init__(self, hurst):
        super().__init__(
            message=f"Hurst exponent must lie in (0, 1), got {hurst}",
            code=ExceptionCode.INVALID_HURST,
            details={"hurst": hurst},
        )


class InvalidBiasError(DataException):
    """Raised when a sticky-level bounce bias is outside [0.5, 1]."""

    def __init__(self, bias):
        super().__init__(
            message=f"Bounce bias must lie in [0.5, 1], got {bias}",
            code=ExceptionCode.INVALID_BIAS,
            details={"bounce_bias": bias},
        )


class NoInputDaysError(DataException):
    """Raised when an input resolves to zero symbol-days."""

    def __init__(self, source: str):
        super().__init__(
            message="no input days",
            code=ExceptionCode.NO_INPUT_DAYS,
            details={"source": source},
        )


class InvalidSurrogateSpecError(DataException):
    """Raised when a surrogate spec is incomplete for its kind."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(
            message=message,
            code=ExceptionCode.INVALID_SURROGATE,
            details=details or {},
        )


class InvalidTickSeriesError(DataException):
    """Raised when tick arrays cannot form a tick series."""

    def __init__(self, reason: str, details: dict = None):
        super().__init__(
            message=f"Invalid tick series: {reason}",
            code=ExceptionCode.INVALID_TICKS,
            details=details or {},
        )
