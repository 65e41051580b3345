"""
Sticky-level walk: a positive control with a known, growing bounce bias.

The walk moves one grid step (`level_spacing` ticks) per sample. Its own confirmed
local extrema become levels. When the price sits on an active level, the step back
to the side it came from is taken with probability q(b), where b is the largest
bounce count among the active levels at that price; otherwise the level is crossed
and every level at that price breaks.

On a grid walk the mean absolute increment equals the grid step, so a stripe of
that width contains exactly the level price and the level engine sees the same
bounces and crosses the generator decided.
"""

from collections import defaultdict
from typing import Dict, List

import numpy as np

from core.exceptions.data_exceptions import (
    InvalidBiasError,
    InvalidSurrogateSpecError,
    TooShortError,
)
from core.models.market import (
    ResampledSeries,
    ResampleMode,
    SurrogateKind,
    SurrogateSpec,
)

BIAS_RAMP_BOUNCES = 5


def bounce_probability(bounces: int, bounce_bias: float) -> float:
    """q(b) = 0.5 + (bias - 0.5) * min(b + 1, 5) / 5; equal to 0.5 at bias 0.5."""
    ramp = min(bounces + 1, BIAS_RAMP_BOUNCES) / BIAS_RAMP_BOUNCES
    return 0.5 + (bounce_bias - 0.5) * ramp


def gen_sticky_level(spec: SurrogateSpec) -> ResampledSeries:
    """
    Generate one sticky-level day, deterministic in `spec.seed`.

    Raises:
        InvalidBiasError: bounce_bias missing or outside [0.5, 1]
        InvalidSurrogateSpecError: level_spacing < 1
        TooShortError: length < 3
    """
    if spec.kind not in (SurrogateKind.STICKY_LEVEL, SurrogateKind.SHUFFLED_RETURNS):
        raise InvalidSurrogateSpecError(
            f"gen_sticky_level cannot build {spec.kind.value}"
        )
    bias = spec.bounce_bias
    if bias is None or not 0.5 <= bias <= 1.0:
        raise InvalidBiasError(bias)
    if spec.level_spacing < 1:
        raise InvalidSurrogateSpecError(
            f"level_spacing must be >= 1 tick, got {spec.level_spacing}",
            details={"level_spacing": spec.level_spacing},
        )
    if spec.length < 3:
        raise TooShortError(spec.length, 3, "sticky-level walk")

    rng = np.random.default_rng(spec.seed)
    coins = rng.random(spec.length)
    step = int(spec.level_spacing)

    prices: List[int] = [int(round(spec.start_price))]
    # price -> bounce counts of the active levels sitting there
    active: Dict[int, List[int]] = defaultdict(list)

    for t in range(1, spec.length):
        current = prices[-1]
        counts = active.get(current)
        if counts and t >= 2:
            entry_side = 1 if prices[-2] > current else -1
            if coins[t] < bounce_probability(max(counts), bias):
                direction = entry_side
                active[current] = [c + 1 for c in counts]
            else:
                direction = -entry_side
                del active[current]
        else:
            direction = 1 if coins[t] < 0.5 else -1

        prices.append(current + direction * step)

        if t >= 2:
            before, peak, after = prices[-3], prices[-2], prices[-1]
            if (peak > before and peak > after) or (peak < before and peak < after):
                active[peak].append(0)

    return ResampledSeries(
        scale=1,
        mode=ResampleMode.EVENT_TICKS,
        prices=np.asarray(prices, dtype=float),
        symbol=spec.symbol,
        day_id=spec.day_id,
    )
