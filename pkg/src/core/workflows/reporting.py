"""
Helpers shared by the report-writing steps.
"""

from typing import Any, Dict

from core.config.run_config import RunConfig

# Fields that do not change any result
_RUN_ONLY_FIELDS = {"input", "output_dir", "workers"}


def report_config(config: RunConfig) -> Dict[str, Any]:
    """The part of the run configuration that determines the results."""
    return config.model_dump(mode="json", exclude=_RUN_ONLY_FIELDS)


def plot_name(kind: str, scale: int) -> str:
    return f"plot_{kind}_{scale}.csv"
