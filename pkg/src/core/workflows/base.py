"""
Base workflow classes and data structures.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from loguru import logger

from core.config.run_config import RunConfig
from core.services.system.file_handler import FileHandler


class WorkflowStatus(Enum):
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


class StepStatus(Enum):
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass
class WorkflowStep:
    """One named stage of a command; the handler returns True on success."""

    name: str
    description: str
    handler: Callable[[], bool]
    depends_on: List[str] = field(default_factory=list)
    status: StepStatus = StepStatus.PENDING
    result: Any = None
    error: Optional[str] = None
    original_exception: Optional[Exception] = None
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None

    def clear(self):
        self.status = StepStatus.PENDING
        self.result = None
        self.error = None
        self.original_exception = None
        self.started_at = None
        self.completed_at = None


@dataclass
class WorkflowResult:
    """Outcome of one command run."""

    workflow_id: str
    status: WorkflowStatus
    steps_completed: int
    steps_failed: int
    total_steps: int
    results: Dict[str, Any] = field(default_factory=dict)
    errors: Dict[str, str] = field(default_factory=dict)
    exception: Optional[Exception] = None
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None
    duration: Optional[float] = None

    @property
    def succeeded(self) -> bool:
        return self.status == WorkflowStatus.COMPLETED


class BaseWorkflow(ABC):
    """Base class for all bounce-lab commands."""

    workflow_id: str = ""

    def __init__(self, config: RunConfig, name: str, description: str):
        self.config = config
        self.name = name
        self.description = description
        self.steps: Dict[str, WorkflowStep] = {}
        self.status = WorkflowStatus.PENDING
        # Step outputs handed to later steps (days, outcomes, summaries)
        self.shared_resources: Dict[str, Any] = {}
        self.files = FileHandler(config.output_dir)
        self.define_steps()

    @abstractmethod
    def define_steps(self):
        """Define the workflow steps. Must be implemented by subclasses."""

    def add_step(self, step: WorkflowStep):
        self.steps[step.name] = step

    def get_step_execution_order(self) -> List[str]:
        """
        Steps sorted so each runs after its dependencies; ties keep the order
        in which the steps were added.

        Raises:
            ValueError: the dependencies form a cycle
        """
        order: List[str] = []
        remaining = list(self.steps)
        while remaining:
            ready = [
                name
                for name in remaining
                if all(dep in order for dep in self.steps[name].depends_on)
            ]
            if not ready:
                raise ValueError(
                    f"Circular dependency detected in workflow steps: {remaining}"
                )
            order.extend(ready)
            remaining = [name for name in remaining if name not in ready]
        return order

    def reset(self):
        self.status = WorkflowStatus.PENDING
        self.shared_resources.clear()
        for step in self.steps.values():
            step.clear()

    def output_files(self) -> List[str]:
        return [str(path) for path in self.files.created]

    def cleanup(self, failed: bool = False):
        """Drop in-memory day results; on failure also remove partial outputs."""
        if failed:
            self.files.remove_created()
        self.shared_resources.clear()
        logger.debug(f"Workflow {self.workflow_id} resources cleaned up")

    def __str__(self) -> str:
        return f"Workflow({self.workflow_id}: {self.name})"
