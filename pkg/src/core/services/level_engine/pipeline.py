"""
Per-day composition: resample -> stripe width -> classify.
"""

from dataclasses import dataclass, field
from typing import List

from core.models.levels import Level, TrialRecord
from core.models.market import ResampledSeries, ResampleMode, TickSeries
from core.services.level_engine.classifier import track_levels
from core.services.level_engine.extrema import stripe_width
from core.services.market_data.resampler import resample


@dataclass
class DayResult:
    """One symbol-day at one scale. Levels never outlive the day."""

    series: ResampledSeries
    delta: float
    trials: List[TrialRecord] = field(default_factory=list)
    levels: List[Level] = field(default_factory=list)


def analyze_series(series: ResampledSeries, stripe_multiplier: float = 1.0) -> DayResult:
    if stripe_multiplier <= 0:
        raise ValueError(f"stripe_multiplier must be positive, got {stripe_multiplier}")
    delta = stripe_multiplier * stripe_width(series)
    if len(series) < 3:
        return DayResult(series=series, delta=delta)
    levels, trials = track_levels(series, delta)
    return DayResult(series=series, delta=delta, trials=trials, levels=levels)


def analyze_day(
    ticks: TickSeries,
    scale: int,
    mode: ResampleMode = ResampleMode.PHYSICAL_SECONDS,
    stripe_multiplier: float = 1.0,
) -> DayResult:
    return analyze_series(resample(ticks, scale, mode), stripe_multiplier)


def run_day(
    ticks: TickSeries,
    scale: int,
    mode: ResampleMode = ResampleMode.PHYSICAL_SECONDS,
    stripe_multiplier: float = 1.0,
) -> List[TrialRecord]:
    """Trials of one day at one scale."""
    return analyze_day(ticks, scale, mode, stripe_multiplier).trials
