"""
Workflow execution exceptions.
"""

from core.exceptions.base_exceptions import ExceptionCode, WorkflowException


class WorkflowExecutionError(WorkflowException):
    """Raised when a workflow cannot be created or run."""

    def __init__(self, workflow_id: str, message: str, details: dict = None):
        super().__init__(
            message=f"Workflow {workflow_id}: {message}",
            code=ExceptionCode.WORKFLOW_EXECUTION_ERROR,
            details={"workflow_id": workflow_id, **(details or {})},
        )


class StepExecutionFailedError(WorkflowException):
    """Wraps an unexpected error raised inside a workflow step."""

    def __init__(self, step_name: str, original_exception: Exception):
        super().__init__(
            message=f"Step {step_name} failed: {original_exception}",
            code=ExceptionCode.STEP_EXECUTION_FAILED,
            details={
                "step": step_name,
                "error_type": type(original_exception).__name__,
            },
            original_exception=original_exception,
        )
