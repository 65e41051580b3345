"""
Resampling of tick records into P_tau.
"""

import numpy as np

from core.exceptions.data_exceptions import ScaleTooLargeError
from core.models.market import ResampledSeries, ResampleMode, TickSeries


def resample(
    series: TickSeries,
    scale: int,
    mode: ResampleMode = ResampleMode.PHYSICAL_SECONDS,
) -> ResampledSeries:
    """
    Sample one price every `scale` events or seconds.

    EventTicks: sample k is the price of event k*scale (1-based), k = 1..N//scale.
    PhysicalSeconds: sample k is the last trade at or before k*scale seconds,
    k = 1..T//scale with T the last timestamp; before the first trade the first
    trade's price is used.
    """
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    mode = ResampleMode(mode)

    if mode == ResampleMode.EVENT_TICKS:
        samples = len(series.prices) // scale
        if samples < 2:
            raise ScaleTooLargeError(scale, samples)
        prices = series.prices[scale - 1 : samples * scale : scale]
    else:
        samples = int(series.duration // scale)
        if samples < 2:
            raise ScaleTooLargeError(scale, samples)
        grid = scale * np.arange(1, samples + 1, dtype=float)
        idx = np.searchsorted(series.timestamps, grid, side="right") - 1
        prices = series.prices[np.clip(idx, 0, None)]

    return ResampledSeries(
        scale=scale,
        mode=mode,
        prices=prices.astype(float),
        symbol=series.symbol,
        day_id=series.day_id,
    )
