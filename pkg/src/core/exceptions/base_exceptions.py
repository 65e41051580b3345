"""
Base exception classes for the bounce-lab system.
"""

from enum import Enum
from typing import Optional


class ExceptionCode(Enum):
    """Enumeration of all possible exception codes."""

    # Input data errors (DATA_1XXX)
    FILE_NOT_FOUND = "DATA_1001"
    PARSE_ERROR = "DATA_1002"
    NON_MONOTONE_TIMESTAMPS = "DATA_1003"
    TOO_SHORT = "DATA_1004"
    SCALE_TOO_LARGE = "DATA_1005"
    INVALID_HURST = "DATA_1006"
    INVALID_BIAS = "DATA_1007"
    NO_INPUT_DAYS = "DATA_1008"
    INVALID_SURROGATE = "DATA_1009"
    INVALID_TICKS = "DATA_1010"

    # Numerical precondition errors (ANALYSIS_2XXX)
    INVALID_COUNTS = "ANALYSIS_2001"
    DEGENERATE_VARIANCE = "ANALYSIS_2002"
    INVALID_DOF = "ANALYSIS_2003"
    SERIES_TOO_SHORT = "ANALYSIS_2004"
    WINDOW_RANGE_INVALID = "ANALYSIS_2005"
    TOO_FEW_BINS = "ANALYSIS_2006"
    EMPTY_SAMPLES = "ANALYSIS_2007"
    PATH_MISMATCH = "ANALYSIS_2008"

    # Workflow errors (WF_3XXX)
    WORKFLOW_EXECUTION_ERROR = "WF_3001"
    STEP_EXECUTION_FAILED = "WF_3002"

    # System errors (SYS_4XXX)
    CONFIGURATION_ERROR = "SYS_4001"
    OUTPUT_NOT_WRITABLE = "SYS_4002"
    INTERNAL_ERROR = "SYS_4004"


class BounceLabException(Exception):
    """Base exception for the bounce-lab system."""

    def __init__(
        self,
        message: str,
        code: ExceptionCode,
        details: Optional[dict] = None,
        original_exception: Optional[Exception] = None,
    ):
        super().__init__(message)
        self.message = message
        self.code = code.value
        self.details = details or {}
        self.original_exception = original_exception

    def __str__(self):
        return f"[{self.code}] {self.message}"

    def __reduce__(self):
        # Worker processes send exceptions back pickled; keep the full state
        return (_rebuild_exception, (type(self), self.__dict__.copy()))

    def to_dict(self):
        """Convert exception to dictionary for serialization."""
        return {
            "code": self.code,
            "message": self.message,
            "details": self.details,
            "original_exception_type": (
                type(self.original_exception).__name__
                if self.original_exception
                else None
            ),
        }


def _rebuild_exception(cls, state: dict) -> BounceLabException:
    exc = Exception.__new__(cls)
    Exception.__init__(exc, state.get("message", ""))
    exc.__dict__.update(state)
    return exc


class DataException(BounceLabException):
    """Base exception for invalid input data or generator parameters."""

    pass


class AnalysisException(BounceLabException):
    """Base exception for violated numerical preconditions."""

    pass


class WorkflowException(BounceLabException):
    """Base exception for workflow-related errors."""

    pass


class SystemException(BounceLabException):
    """Base exception for system-level errors."""

    pass
