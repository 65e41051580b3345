"""
Exception module for the bounce-lab system.
Contains custom exceptions for different error types.
"""

from core.exceptions.analysis_exceptions import (
    DegenerateVarianceError,
    EmptySamplesError,
    InvalidCountsError,
    InvalidDofError,
    PathMismatchError,
    SeriesTooShortError,
    TooFewBinsError,
    WindowRangeInvalidError,
)
from core.exceptions.base_exceptions import (
    AnalysisException,
    BounceLabException,
    DataException,
    ExceptionCode,
    SystemException,
    WorkflowException,
)
from core.exceptions.data_exceptions import (
    InvalidBiasError,
    InvalidHurstError,
    InvalidSurrogateSpecError,
    InvalidTickSeriesError,
    NoInputDaysError,
    NonMonotoneTimestampsError,
    ScaleTooLargeError,
    TickFileNotFoundError,
    TickParseError,
    TooShortError,
)
from core.exceptions.system_exceptions import ConfigurationError, OutputNotWritableError
from core.exceptions.workflow_exceptions import (
    StepExecutionFailedError,
    WorkflowExecutionError,
)

__all__ = [
    "BounceLabException",
    "ExceptionCode",
    "DataException",
    "AnalysisException",
    "WorkflowException",
    "SystemException",
    "TickFileNotFoundError",
    "TickParseError",
    "NonMonotoneTimestampsError",
    "TooShortError",
    "ScaleTooLargeError",
    "InvalidHurstError",
    "InvalidBiasError",
    "InvalidSurrogateSpecError",
    "InvalidTickSeriesError",
    "NoInputDaysError",
    "InvalidCountsError",
    "DegenerateVarianceError",
    "InvalidDofError",
    "SeriesTooShortError",
    "WindowRangeInvalidError",
    "TooFewBinsError",
    "EmptySamplesError",
    "PathMismatchError",
    "ConfigurationError",
    "OutputNotWritableError",
    "WorkflowExecutionError",
    "StepExecutionFailedError",
]
