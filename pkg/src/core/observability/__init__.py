"""
Observability module for bounce-lab.
Provides metrics capabilities.
"""

from core.observability.metrics import (
    end_workflow_timer,
    get_metrics_text,
    metrics_registry,
    record_day,
    record_trials,
    record_workflow_step,
    start_workflow_timer,
    write_metrics,
)

__all__ = [
    "metrics_registry",
    "record_day",
    "record_trials",
    "record_workflow_step",
    "start_workflow_timer",
    "end_workflow_timer",
    "get_metrics_text",
    "write_metrics",
]
