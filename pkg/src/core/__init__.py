"""
Core package for bounce-lab.
Contains the analysis services, workflow orchestration and configuration.
"""

import core.logging  # noqa: F401  Ensures logging is configured
from core.config import config
from core.orchestrator import create_orchestrator
from core.workflows.base import BaseWorkflow, WorkflowResult, WorkflowStep
from core.workflows.registry import workflow_registry

__all__ = [
    "config",
    "create_orchestrator",
    "BaseWorkflow",
    "WorkflowResult",
    "WorkflowStep",
    "workflow_registry",
]
