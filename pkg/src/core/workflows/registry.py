"""
Workflow registry: command name -> workflow class.
"""

from typing import Dict, Type

from loguru import logger

from core.config.run_config import RunConfig
from core.exceptions.workflow_exceptions import WorkflowExecutionError
from core.workflows.analyze_workflow import AnalyzeWorkflow
from core.workflows.base import BaseWorkflow
from core.workflows.features_workflow import FeaturesWorkflow
from core.workflows.hurst_workflow import HurstWorkflow
from core.workflows.surrogate_workflow import SurrogateWorkflow


class WorkflowRegistry:
    """Registry for managing available workflow classes."""

    def __init__(self):
        self._workflow_classes: Dict[str, Type[BaseWorkflow]] = {}
        self._register_built_in_workflows()

    def _register_built_in_workflows(self):
        """Register built-in workflow classes."""
        self.register_workflow_class(AnalyzeWorkflow)
        self.register_workflow_class(HurstWorkflow)
        self.register_workflow_class(FeaturesWorkflow)
        self.register_workflow_class(SurrogateWorkflow)

    def register_workflow_class(self, workflow_class: Type[BaseWorkflow]):
        """Register a workflow class under its command name."""
        workflow_id = workflow_class.workflow_id
        if not workflow_id:
            raise ValueError(f"{workflow_class.__name__} has no workflow_id")
        self._workflow_classes[workflow_id] = workflow_class
        logger.debug(
            f"Workflow class registered: {workflow_id} -> {workflow_class.__name__}"
        )

    def create_workflow(self, workflow_id: str, config: RunConfig) -> BaseWorkflow:
        """Create a workflow instance by ID."""
        return self.get_workflow_class(workflow_id)(config)

    def list_available_workflows(self) -> Dict[str, Type[BaseWorkflow]]:
        """List all available workflow classes."""
        return self._workflow_classes.copy()

    def get_workflow_class(self, workflow_id: str) -> Type[BaseWorkflow]:
        """Get a workflow class by ID."""
        if workflow_id not in self._workflow_classes:
            raise WorkflowExecutionError(workflow_id, "unknown workflow")
        return self._workflow_classes[workflow_id]


# Global registry instance
workflow_registry = WorkflowRegistry()
