"""
Bounce features: recurrence time and maximum excursion between consecutive
trials on the same level. Supports and resistances are pooled.
"""

from collections import defaultdict
from typing import Dict, List, Sequence

import numpy as np

from core.exceptions.analysis_exceptions import PathMismatchError
from core.models.features import BounceFeature
from core.models.levels import Outcome, TrialRecord
from core.models.market import ResampledSeries

CONSECUTIVE = "consecutive"
BOUNCE_BOUNCE = "bounce_bounce"


def _check_indices(trials: Sequence[TrialRecord], length: int):
    for trial in trials:
        for index in (trial.enter_index, trial.exit_index):
            if not 0 <= index < length:
                raise PathMismatchError(index, length)


def extract_features(
    series: ResampledSeries,
    trials: Sequence[TrialRecord],
    pair_mode: str = CONSECUTIVE,
) -> List[BounceFeature]:
    """
    One feature per consecutive trial pair (earlier, later) on a level:
    recurrence_time = later.enter_index - earlier.exit_index, and
    max_excursion = max |price - level| over samples [earlier.exit, later.enter).

    pair_mode "bounce_bounce" keeps only pairs whose later trial is a bounce.
    """
    pair_mode = getattr(pair_mode, "value", pair_mode)
    if pair_mode not in (CONSECUTIVE, BOUNCE_BOUNCE):
        raise ValueError(f"Unknown pair mode: {pair_mode}")
    prices = series.prices
    _check_indices(trials, len(prices))

    by_level: Dict[tuple, List[TrialRecord]] = defaultdict(list)
    for trial in trials:
        by_level[trial.level_key].append(trial)

    features = []
    for level_trials in by_level.values():
        level_trials.sort(key=lambda t: t.enter_index)
        for earlier, later in zip(level_trials, level_trials[1:]):
            if pair_mode == BOUNCE_BOUNCE and later.outcome != Outcome.BOUNCE:
                continue
            between = prices[earlier.exit_index : later.enter_index]
            features.append(
                BounceFeature(
                    recurrence_time=later.enter_index - earlier.exit_index,
                    max_excursion=float(np.max(np.abs(between - earlier.level_value))),
                    symbol=earlier.symbol,
                    day_id=earlier.day_id,
                    scale=earlier.scale,
                    level_value=earlier.level_value,
                    kind=earlier.kind,
                )
            )

    features.sort(key=lambda f: (f.symbol, f.day_id, f.scale))
    return features
