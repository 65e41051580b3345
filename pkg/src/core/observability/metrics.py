"""
Prometheus metrics for bounce-lab runs.
Kept out of every report file; written on request with --metrics-file.
"""

import time
from collections import Counter as CountMap
from pathlib import Path
from typing import Dict, Iterable

from prometheus_client import (
    CollectorRegistry,
    Counter,
    Histogram,
    generate_latest,
    write_to_textfile,
)

from core.models.levels import TrialRecord

# Create a custom registry for our metrics
metrics_registry = CollectorRegistry()

days_processed_total = Counter(
    "bounce_lab_days_processed_total",
    "Symbol-days processed per workflow",
    ["workflow_type", "status"],  # analyzed, skipped, failed
    registry=metrics_registry,
)

trials_recorded_total = Counter(
    "bounce_lab_trials_recorded_total",
    "Stripe trials classified",
    ["kind", "outcome"],
    registry=metrics_registry,
)

workflow_steps_total = Counter(
    "bounce_lab_workflow_steps_total",
    "Total workflow steps executed",
    ["workflow_type", "step_name", "status"],  # success/failed/skipped
    registry=metrics_registry,
)

workflow_duration_seconds = Histogram(
    "bounce_lab_workflow_duration_seconds",
    "Workflow execution duration",
    ["workflow_type"],
    buckets=[0.5, 1, 5, 15, 60, 300, 1200],
    registry=metrics_registry,
)

# Workflow timing trackers
_workflow_start_times: Dict[str, float] = {}


def record_day(workflow_type: str, status: str, count: int = 1) -> None:
    days_processed_total.labels(workflow_type=workflow_type, status=status).inc(count)


def record_trials(trials: Iterable[TrialRecord]) -> None:
    """Count trials by (kind, outcome)."""
    tally = CountMap((t.kind.value, t.outcome.value) for t in trials)
    for (kind, outcome), count in sorted(tally.items()):
        trials_recorded_total.labels(kind=kind, outcome=outcome).inc(count)


def record_workflow_step(workflow_type: str, step_name: str, status: str) -> None:
    """Record workflow step execution result."""
    workflow_steps_total.labels(
        workflow_type=workflow_type, step_name=step_name, status=status
    ).inc()


def start_workflow_timer(run_id: str) -> None:
    _workflow_start_times[run_id] = time.perf_counter()


def end_workflow_timer(run_id: str, workflow_type: str) -> None:
    """End timing a workflow and record duration."""
    start_time = _workflow_start_times.pop(run_id, None)
    if start_time is not None:
        duration = time.perf_counter() - start_time
        workflow_duration_seconds.labels(workflow_type=workflow_type).observe(duration)


def get_metrics_text() -> bytes:
    """Registry in the Prometheus text exposition format."""
    return generate_latest(metrics_registry)


def write_metrics(path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_to_textfile(str(path), metrics_registry)
    return path
