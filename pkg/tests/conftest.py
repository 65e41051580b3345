"""
Shared fixtures for the bounce-lab test suite.
"""

from pathlib import Path
from typing import Iterable, Sequence, Tuple

import numpy as np
import pytest

from core.logging import configure_logging
from core.models.market import ResampledSeries, ResampleMode


def make_series(prices: Sequence[float], scale: int = 1) -> ResampledSeries:
    return ResampledSeries(
        scale=scale,
        mode=ResampleMode.EVENT_TICKS,
        prices=np.asarray(prices, dtype=float),
        symbol="TEST",
        day_id="d001",
    )


def write_tick_csv(
    path: Path, rows: Iterable[Tuple[float, int]], header: str = "timestamp,price"
) -> Path:
    lines = [header] + [f"{t},{p}" for t, p in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def series_factory():
    return make_series


@pytest.fixture
def tick_file(tmp_path):
    def _write(rows, name="ABC_20020102.csv", header="timestamp,price"):
        return write_tick_csv(tmp_path / name, rows, header)

    return _write


@pytest.fixture
def restore_logging():
    """Re-attach the stderr sink after tests that capture it."""
    yield
    configure_logging("INFO")
