"""
Null-model surrogates and their materialization as tick records.
"""

import numpy as np

from core.exceptions.data_exceptions import InvalidSurrogateSpecError, TooShortError
from core.models.market import (
    ResampleMode,
    ResampledSeries,
    SurrogateKind,
    SurrogateSpec,
    TickSeries,
)
from core.services.market_data.fractional import gen_fractional_walk
from core.services.market_data.sticky import gen_sticky_level
from core.utils.seeds import derive_seed


def shuffle_returns(series: ResampledSeries, seed: int) -> ResampledSeries:
    """
    Keep the first price and permute the increments (Fisher-Yates, seeded).

    First price, last price, length and the increment multiset are preserved;
    temporal order of the increments is destroyed.
    """
    if len(series) < 3:
        raise TooShortError(len(series), 3, "series to shuffle")
    rng = np.random.default_rng(seed)
    shuffled = rng.permutation(series.increments)
    prices = series.prices[0] + np.concatenate([[0.0], np.cumsum(shuffled)])
    return series.with_prices(prices)


def generate_surrogate(spec: SurrogateSpec) -> ResampledSeries:
    """Dispatch on the surrogate kind. ShuffledReturns shuffles a `source` day."""
    if spec.kind == SurrogateKind.FRACTIONAL_WALK:
        return gen_fractional_walk(spec)
    if spec.kind == SurrogateKind.STICKY_LEVEL:
        return gen_sticky_level(spec)

    if spec.source == SurrogateKind.FRACTIONAL_WALK:
        source = gen_fractional_walk(spec)
    elif spec.source == SurrogateKind.STICKY_LEVEL:
        source = gen_sticky_level(spec)
    else:
        raise InvalidSurrogateSpecError(
            "ShuffledReturns needs a FractionalWalk or StickyLevel source"
        )
    return shuffle_returns(source, derive_seed(spec.seed, 1))


def to_tick_series(
    series: ResampledSeries, interval: float = 1.0, hold: int = 1
) -> TickSeries:
    """
    One trade every `interval` seconds starting at t=0, prices rounded to
    positive integer ticks. Each price is traded `hold` times in a row.
    """
    if interval <= 0:
        raise ValueError(f"interval must be positive, got {interval}")
    if hold < 1:
        raise ValueError(f"hold must be >= 1, got {hold}")
    prices = np.clip(np.round(series.prices), 1, None).astype(np.int64)
    prices = np.repeat(prices, hold)
    timestamps = np.arange(len(prices), dtype=float) * interval
    return TickSeries(
        symbol=series.symbol,
        day_id=series.day_id,
        timestamps=timestamps,
        prices=prices,
    )


def scale_matched_ticks(
    series: ResampledSeries, scale: int, mode: ResampleMode
) -> TickSeries:
    """
    Tick record whose resampling at (`scale`, `mode`) gives back the generated
    path, one step per sample: a trade every `scale` seconds in seconds mode
    (the opening price falls before the first grid point), each price held for
    `scale` events in ticks mode.
    """
    if mode == ResampleMode.PHYSICAL_SECONDS:
        return to_tick_series(series, interval=float(scale))
    return to_tick_series(series, hold=scale)


def shuffle_ticks(ticks: TickSeries, seed: int) -> TickSeries:
    """Shuffled-returns counterpart of a tick record, on its own timestamps."""
    if len(ticks) < 3:
        raise TooShortError(len(ticks), 3, "tick series to shuffle")
    rng = np.random.default_rng(seed)
    shuffled = rng.permutation(np.diff(ticks.prices))
    prices = ticks.prices[0] + np.concatenate([[0], np.cumsum(shuffled)])
    return TickSeries(
        symbol=ticks.symbol,
        day_id=ticks.day_id,
        timestamps=ticks.timestamps,
        prices=np.clip(prices, 1, None),
    )
