"""
Configuration and filesystem exceptions.
"""

from core.exceptions.base_exceptions import ExceptionCode, SystemException


class ConfigurationError(SystemException):
    """Raised when a run configuration is invalid."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(
            message=f"Configuration error: {message}",
            code=ExceptionCode.CONFIGURATION_ERROR,
            details=details or {},
        )


class OutputNotWritableError(SystemException):
    """Raised when the output location cannot be written."""

    def __init__(self, path: str, original_exception: Exception = None):
        super().__init__(
            message=f"Output path not writable: {path}",
            code=ExceptionCode.OUTPUT_NOT_WRITABLE,
            details={"path": path},
            original_exception=original_exception,
        )
