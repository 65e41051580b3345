"""
Support/resistance levels and the trials recorded on them.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np


class LevelKind(str, Enum):
    SUPPORT = "support"
    RESISTANCE = "resistance"


class LevelState(str, Enum):
    ACTIVE = "active"
    BROKEN = "broken"


class Outcome(str, Enum):
    BOUNCE = "bounce"
    CROSS = "cross"


class ExitSide(str, Enum):
    ENTRY_SIDE = "entry_side"
    FAR_SIDE = "far_side"


@dataclass
class Level:
    """A candidate support or resistance spawned by a local extremum."""

    value: float
    kind: LevelKind
    half_width: float
    created_at: int
    bounces: int = 0
    state: LevelState = LevelState.ACTIVE

    @property
    def lower(self) -> float:
        return self.value - self.half_width

    @property
    def upper(self) -> float:
        return self.value + self.half_width

    @property
    def is_active(self) -> bool:
        return self.state == LevelState.ACTIVE

    def side_of(self, prices: np.ndarray) -> np.ndarray:
        """+1 above the stripe, -1 below, 0 inside (edges count as inside)."""
        prices = np.asarray(prices, dtype=float)
        return np.where(prices > self.upper, 1, np.where(prices < self.lower, -1, 0))

    def record_bounce(self):
        if not self.is_active:
            raise ValueError(f"Level {self.value} is broken, cannot bounce")
        self.bounces += 1

    def mark_broken(self):
        if not self.is_active:
            raise ValueError(f"Level {self.value} is already broken")
        self.state = LevelState.BROKEN


@dataclass(frozen=True)
class TrialRecord:
    """One stripe-entry event on a level and how it resolved."""

    level_value: float
    kind: LevelKind
    b_prev: int
    outcome: Outcome
    enter_index: int
    exit_index: int
    symbol: str
    day_id: str
    scale: int
    level_created_at: int = -1

    @property
    def level_key(self) -> tuple:
        """Identifies the level within one series."""
        return (self.kind.value, self.level_created_at, self.level_value)

    def to_row(self) -> dict:
        """Flat trial CSV row."""
        return {
            "symbol": self.symbol,
            "day": self.day_id,
            "scale": self.scale,
            "kind": self.kind.value,
            "level_value": self.level_value,
            "b_prev": self.b_prev,
            "outcome": self.outcome.value,
            "enter_index": self.enter_index,
            "exit_index": self.exit_index,
        }


TRIAL_CSV_COLUMNS = [
    "symbol",
    "day",
    "scale",
    "kind",
    "level_value",
    "b_prev",
    "outcome",
    "enter_index",
    "exit_index",
]


@dataclass(frozen=True)
class BounceEvent:
    trial: TrialRecord
    exit_side: ExitSide

    @classmethod
    def from_trial(cls, trial: TrialRecord) -> "BounceEvent":
        side = (
            ExitSide.ENTRY_SIDE
            if trial.outcome == Outcome.BOUNCE
            else ExitSide.FAR_SIDE
        )
        return cls(trial=trial, exit_side=side)

    @property
    def is_bounce(self) -> bool:
        return self.exit_side == ExitSide.ENTRY_SIDE
