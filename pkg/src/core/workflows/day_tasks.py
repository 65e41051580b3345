"""
Work done for one symbol-day inside a worker: load or generate it, resample each
scale and run the requested analysis on the day and (optionally) its shuffled
counterpart.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from loguru import logger

from core.config.run_config import RunConfig
from core.exceptions.analysis_exceptions import (
    DegenerateVarianceError,
    SeriesTooShortError,
)
from core.exceptions.data_exceptions import ScaleTooLargeError, TooShortError
from core.models.features import BounceFeature
from core.models.levels import TrialRecord
from core.models.market import ResampledSeries
from core.models.statistics import HurstEstimate
from core.services.features.extraction import extract_features
from core.services.inference.dfa import dfa_hurst
from core.services.level_engine.pipeline import analyze_series
from core.services.market_data.day_source import DaySource
from core.services.market_data.resampler import resample
from core.services.market_data.surrogates import scale_matched_ticks, shuffle_returns
from core.utils.seeds import derive_seed

TRIALS = "trials"
FEATURES = "features"
HURST = "hurst"

# spawn-key prefix of the shuffled-baseline streams
BASELINE_STREAM = 7


def baseline_seed(root_seed: int, day_index: int, scale: int) -> int:
    return derive_seed(root_seed, BASELINE_STREAM, day_index, scale)


@dataclass(frozen=True)
class DayTask:
    source: DaySource
    index: int
    config: RunConfig
    analysis: str = TRIALS


@dataclass
class ScaleOutcome:
    scale: int
    skipped: Optional[str] = None
    samples: int = 0
    delta: float = 0.0
    trials: List[TrialRecord] = field(default_factory=list)
    shuffled_trials: List[TrialRecord] = field(default_factory=list)
    features: List[BounceFeature] = field(default_factory=list)
    shuffled_features: List[BounceFeature] = field(default_factory=list)
    hurst: Optional[HurstEstimate] = None


@dataclass
class DayOutcome:
    symbol: str
    day_id: str
    scales: List[ScaleOutcome] = field(default_factory=list)

    @property
    def sort_key(self):
        return (self.symbol, self.day_id)

    def at_scale(self, scale: int) -> ScaleOutcome:
        for outcome in self.scales:
            if outcome.scale == scale:
                return outcome
        raise KeyError(scale)


def _classify(series: ResampledSeries, task: DayTask, outcome: ScaleOutcome):
    config = task.config
    day = analyze_series(series, config.stripe_multiplier)
    outcome.delta = day.delta
    outcome.trials = day.trials
    if task.analysis == FEATURES:
        outcome.features = extract_features(series, day.trials, config.pair_mode)

    if not config.shuffled_baseline or len(series) < 3:
        return
    seed = baseline_seed(config.seed, task.index, series.scale)
    shuffled = shuffle_returns(series, seed)
    shuffled_day = analyze_series(shuffled, config.stripe_multiplier)
    outcome.shuffled_trials = shuffled_day.trials
    if task.analysis == FEATURES:
        outcome.shuffled_features = extract_features(
            shuffled, shuffled_day.trials, config.pair_mode
        )


def process_day(task: DayTask) -> DayOutcome:
    """Per-day unit of work; pure in its task, so it can run in any process."""
    config = task.config
    source = task.source
    if source.follows_scale:
        walk = source.generate()
    else:
        ticks = source.load()
    result = DayOutcome(symbol=source.symbol, day_id=source.day_id)
    identity = f"{source.symbol}_{source.day_id}"

    for scale in config.scales:
        outcome = ScaleOutcome(scale=scale)
        result.scales.append(outcome)
        if source.follows_scale:
            ticks = scale_matched_ticks(walk, scale, config.mode)
        try:
            series = resample(ticks, scale, config.mode)
        except ScaleTooLargeError as e:
            outcome.skipped = e.message
            logger.warning(f"Skipping {identity} at scale {scale}: {e.message}")
            continue
        outcome.samples = len(series)

        if task.analysis == HURST:
            try:
                outcome.hurst = dfa_hurst(
                    series,
                    window_min=config.hurst_window_min,
                    window_max=config.hurst_window_max,
                    n_windows=config.hurst_n_windows,
                )
            except (SeriesTooShortError, TooShortError, DegenerateVarianceError) as e:
                outcome.skipped = e.message
                logger.warning(f"Skipping {identity} at scale {scale}: {e.message}")
        else:
            _classify(series, task, outcome)

    logger.debug(f"Day {identity} processed ({task.analysis})")
    return result
