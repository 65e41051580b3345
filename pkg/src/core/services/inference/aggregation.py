"""
Pooling of trial records into per-b_prev bounce statistics.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List

from core.models.levels import LevelKind, Outcome, TrialRecord
from core.models.statistics import BounceStats
from core.services.inference.bayes import bayes_estimate


@dataclass
class TrialCounts:
    """(n, N) per b_prev class for one kind. Counts merge by addition."""

    kind: LevelKind
    max_b: int
    bounces: Counter = field(default_factory=Counter)
    trials: Counter = field(default_factory=Counter)
    excluded_zero: int = 0
    excluded_above: int = 0

    def add(self, trial: TrialRecord):
        if trial.kind != self.kind:
            return
        if trial.b_prev == 0:
            self.excluded_zero += 1
            return
        if trial.b_prev > self.max_b:
            self.excluded_above += 1
            return
        self.trials[trial.b_prev] += 1
        if trial.outcome == Outcome.BOUNCE:
            self.bounces[trial.b_prev] += 1

    def merge(self, other: "TrialCounts") -> "TrialCounts":
        if (other.kind, other.max_b) != (self.kind, self.max_b):
            raise ValueError("Cannot merge counts of different kind or max_b")
        return TrialCounts(
            kind=self.kind,
            max_b=self.max_b,
            bounces=self.bounces + other.bounces,
            trials=self.trials + other.trials,
            excluded_zero=self.excluded_zero + other.excluded_zero,
            excluded_above=self.excluded_above + other.excluded_above,
        )

    @property
    def pooled(self) -> int:
        return sum(self.trials.values())

    def to_stats(self) -> List[BounceStats]:
        stats = []
        for b in range(1, self.max_b + 1):
            n, total = self.bounces[b], self.trials[b]
            mean, variance = bayes_estimate(n, total)
            stats.append(BounceStats(b, n, total, mean, variance))
        return stats

    def diagnostics(self) -> Dict[str, Any]:
        return {
            "pooled_trials": self.pooled,
            "excluded_b_prev_zero": self.excluded_zero,
            "excluded_b_prev_above_max": self.excluded_above,
        }


def count_trials(
    trials: Iterable[TrialRecord], kind: LevelKind, max_b: int
) -> TrialCounts:
    if max_b < 1:
        raise ValueError(f"max_b must be >= 1, got {max_b}")
    counts = TrialCounts(kind=LevelKind(kind), max_b=max_b)
    for trial in trials:
        counts.add(trial)
    return counts


def aggregate_trials(
    trials: Iterable[TrialRecord], kind: LevelKind, max_b: int
) -> List[BounceStats]:
    """One BounceStats per b_prev = 1..max_b; empty classes carry the prior."""
    return count_trials(trials, kind, max_b).to_stats()
