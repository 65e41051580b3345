"""
Detrended fluctuation analysis (first order) and the Hurst exponent it implies.
"""

from typing import Optional, Union

import numpy as np
from scipy import stats

from core.exceptions.analysis_exceptions import (
    DegenerateVarianceError,
    SeriesTooShortError,
    WindowRangeInvalidError,
)
from core.models.market import ResampledSeries
from core.models.statistics import HurstEstimate

MIN_WINDOW = 4


def window_sizes(window_min: int, window_max: int, n_windows: int) -> np.ndarray:
    """Log-spaced integer window sizes, strictly increasing (duplicates dropped)."""
    sizes = np.round(np.geomspace(window_min, window_max, n_windows)).astype(np.int64)
    return np.unique(sizes)


def fluctuation(profile: np.ndarray, n: int) -> float:
    """RMS residual of a linear fit in each non-overlapping window of size n."""
    segments = profile[: (len(profile) // n) * n].reshape(-1, n)
    x = np.arange(n, dtype=float)
    slope, intercept = np.polyfit(x, segments.T, 1)
    trend = slope[:, None] * x + intercept[:, None]
    return float(np.sqrt(np.mean((segments - trend) ** 2)))


def dfa_hurst(
    data: Union[ResampledSeries, np.ndarray],
    window_min: int = 8,
    window_max: Optional[int] = None,
    n_windows: int = 16,
) -> HurstEstimate:
    """
    Hurst exponent as the slope of ln sigma(n) against ln n.

    `data` is either a price path (its first differences are used) or a 1-D
    array of increments. window_max defaults to a quarter of the increments.

    Raises:
        WindowRangeInvalidError: window_min < 4, window_max < window_min, or
            fewer than two distinct window sizes
        SeriesTooShortError: fewer than 4 * window_max increments
    """
    if isinstance(data, ResampledSeries):
        increments = data.increments
    else:
        increments = np.asarray(data, dtype=float).ravel()
    length = len(increments)

    if window_min < MIN_WINDOW or n_windows < 2:
        raise WindowRangeInvalidError(window_min, window_max, n_windows)
    if window_max is None:
        window_max = length // 4
        if window_max <= window_min:
            raise SeriesTooShortError(length, 4 * (window_min + 1))
    if window_max <= window_min:
        raise WindowRangeInvalidError(window_min, window_max, n_windows)
    if length < 4 * window_max:
        raise SeriesTooShortError(length, 4 * window_max)

    sizes = window_sizes(window_min, window_max, n_windows)
    if len(sizes) < 2:
        raise WindowRangeInvalidError(window_min, window_max, n_windows)

    profile = np.cumsum(increments - np.mean(increments))
    sigmas = np.array([fluctuation(profile, int(n)) for n in sizes])
    if np.any(sigmas <= 0):
        raise DegenerateVarianceError(
            "DFA fluctuation vanished at some window size",
            details={"window_sizes": sizes[sigmas <= 0].tolist()},
        )

    fit = stats.linregress(np.log(sizes), np.log(sigmas))
    return HurstEstimate(
        hurst=float(fit.slope),
        window_sizes=sizes,
        fluctuations=sigmas,
        fit_slope=float(fit.slope),
        fit_intercept=float(fit.intercept),
        fit_stderr=float(fit.stderr),
    )
