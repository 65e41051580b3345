"""
Stripe width and local-extremum detection on a resampled path.
"""

from typing import List, NamedTuple

import numpy as np

from core.exceptions.data_exceptions import TooShortError
from core.models.levels import LevelKind
from core.models.market import ResampledSeries


class Extremum(NamedTuple):
    index: int
    value: float
    kind: LevelKind


def stripe_width(series: ResampledSeries) -> float:
    """Mean absolute increment of the resampled path, in ticks."""
    if len(series) < 2:
        raise TooShortError(len(series), 2, "series for stripe width")
    return float(np.mean(np.abs(series.increments)))


def detect_extrema(series: ResampledSeries) -> List[Extremum]:
    """
    Strict local maxima (Resistance) and minima (Support), in index order.

    Runs of equal prices are collapsed first: a plateau bounded by strictly lower
    (higher) prices on both sides is one Resistance (Support) indexed at its
    first sample.
    """
    prices = series.prices
    if len(prices) < 3:
        raise TooShortError(len(prices), 3, "series for extrema")

    starts = np.concatenate([[0], np.flatnonzero(np.diff(prices) != 0) + 1])
    values = prices[starts]
    if len(values) < 3:
        return []

    middle, left, right = values[1:-1], values[:-2], values[2:]
    peaks = (middle > left) & (middle > right)
    troughs = (middle < left) & (middle < right)

    extrema = []
    for j in np.flatnonzero(peaks | troughs):
        kind = LevelKind.RESISTANCE if peaks[j] else LevelKind.SUPPORT
        extrema.append(Extremum(int(starts[j + 1]), float(middle[j]), kind))
    return extrema
