"""
Logging helpers for the bounce-lab core package.
"""

from core.logging.setup import (
    clear_run_id,
    configure_logging,
    get_log_level,
    get_run_id,
    set_run_id,
)

configure_logging()

__all__ = [
    "configure_logging",
    "set_run_id",
    "clear_run_id",
    "get_run_id",
    "get_log_level",
]
