"""
Least-squares power-law fit on a log-log histogram.
"""

from typing import Optional, Tuple

import numpy as np
from scipy import stats

from core.exceptions.analysis_exceptions import TooFewBinsError
from core.models.features import Histogram
from core.models.statistics import PowerLawFit

MIN_BINS = 3


def powerlaw_fit(
    histogram: Histogram, fit_range: Optional[Tuple[float, float]] = None
) -> PowerLawFit:
    """
    density ~ amplitude * x^exponent, fitted on bins with positive density whose
    center lies in fit_range (inclusive; whole histogram by default).
    """
    centers = histogram.bin_centers
    density = np.asarray(histogram.density, dtype=float)
    if fit_range is None:
        fit_range = (float(histogram.bin_edges[0]), float(histogram.bin_edges[-1]))
    low, high = fit_range

    usable = (density > 0) & (centers > 0) & (centers >= low) & (centers <= high)
    if usable.sum() < MIN_BINS:
        raise TooFewBinsError(int(usable.sum()))

    fit = stats.linregress(np.log(centers[usable]), np.log(density[usable]))
    return PowerLawFit(
        exponent=float(fit.slope),
        amplitude=float(np.exp(fit.intercept)),
        fit_range=(float(low), float(high)),
        r_squared=float(fit.rvalue**2),
        bins_used=int(usable.sum()),
    )
