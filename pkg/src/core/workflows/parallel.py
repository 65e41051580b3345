"""
Fan-out of independent symbol-days over a process pool.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from loguru import logger

from core.config import config as app_config
from core.logging import configure_logging, get_log_level, get_run_id, set_run_id

T = TypeVar("T")
R = TypeVar("R")


def pool_size(requested: Optional[int], n_days: int) -> int:
    """min(requested workers, BOUNCE_LAB_THREADS, days), at least 1."""
    workers = requested if requested is not None else app_config.threads
    return max(1, min(workers, app_config.threads, n_days))


def _init_worker(level: str, run_id: str):
    configure_logging(level)
    set_run_id(run_id)


def map_days(fn: Callable[[T], R], tasks: Sequence[T], workers: int) -> List[R]:
    """Apply `fn` to every task; inline for one worker, else in a process pool.
    Results come back in task order."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]

    logger.info(f"Processing {len(tasks)} days on {workers} worker processes")
    with ProcessPoolExecutor(
        max_workers=workers,
        initializer=_init_worker,
        initargs=(get_log_level(), get_run_id()),
    ) as pool:
        return list(pool.map(fn, tasks))
