"""
Workflows package: one workflow per bounce-lab command.
"""

from core.workflows.analyze_workflow import AnalyzeWorkflow
from core.workflows.base import BaseWorkflow, WorkflowResult, WorkflowStep
from core.workflows.features_workflow import FeaturesWorkflow
from core.workflows.hurst_workflow import HurstWorkflow
from core.workflows.registry import workflow_registry
from core.workflows.surrogate_workflow import SurrogateWorkflow

__all__ = [
    "AnalyzeWorkflow",
    "BaseWorkflow",
    "FeaturesWorkflow",
    "HurstWorkflow",
    "SurrogateWorkflow",
    "WorkflowResult",
    "WorkflowStep",
    "workflow_registry",
]
