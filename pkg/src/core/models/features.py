"""
Bounce features and their histograms.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict

import numpy as np

from core.models.levels import LevelKind


class Binning(str, Enum):
    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"


@dataclass(frozen=True)
class BounceFeature:
    """Recurrence time (in resampled steps) and max excursion (in ticks) between
    two consecutive trials on one level."""

    recurrence_time: int
    max_excursion: float
    symbol: str
    day_id: str
    scale: int
    level_value: float
    kind: LevelKind

    def to_row(self) -> Dict[str, Any]:
        return {
            "symbol": self.symbol,
            "day": self.day_id,
            "scale": self.scale,
            "kind": self.kind.value,
            "level_value": self.level_value,
            "recurrence_time": self.recurrence_time,
            "max_excursion": self.max_excursion,
        }


FEATURE_CSV_COLUMNS = [
    "symbol",
    "day",
    "scale",
    "kind",
    "level_value",
    "recurrence_time",
    "max_excursion",
]


@dataclass(frozen=True, eq=False)
class Histogram:
    bin_edges: np.ndarray
    counts: np.ndarray
    density: np.ndarray
    binning: Binning

    @property
    def bin_centers(self) -> np.ndarray:
        left, right = self.bin_edges[:-1], self.bin_edges[1:]
        if self.binning == Binning.LOGARITHMIC:
            return np.sqrt(left * right)
        return 0.5 * (left + right)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "edges": self.bin_edges.tolist(),
            "counts": self.counts.tolist(),
            "density": self.density.tolist(),
            "binning": self.binning.value,
        }
