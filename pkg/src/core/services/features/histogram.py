"""
Deterministic histograms of positive samples and tail-mass comparisons.
"""

from typing import Any, Dict, Sequence

import numpy as np

from core.exceptions.analysis_exceptions import EmptySamplesError
from core.models.features import Binning, Histogram


def _bin_edges(samples: np.ndarray, binning: Binning, n_bins: int) -> np.ndarray:
    low, high = float(samples.min()), float(samples.max())
    integral = bool(np.all(samples == np.round(samples)))

    if binning == Binning.LINEAR:
        if low == high:
            return np.array([low - 0.5, high + 0.5])
        return np.linspace(low, high, n_bins + 1)

    if low <= 0:
        raise ValueError("Logarithmic binning needs strictly positive samples")
    if integral:
        # Half-integer edges so no bin falls between two integers
        edges = np.geomspace(low - 0.5, high + 0.5, n_bins + 1)
        snapped = np.round(edges[1:-1] - 0.5) + 0.5
        inner = snapped[(snapped > edges[0]) & (snapped < edges[-1])]
        return np.unique(np.concatenate([[edges[0]], inner, [edges[-1]]]))
    if low == high:
        return np.array([low / 2.0, high * 2.0])
    return np.geomspace(low, high, n_bins + 1)


def build_histogram(
    samples: Sequence[float],
    binning: Binning = Binning.LOGARITHMIC,
    n_bins: int = 20,
) -> Histogram:
    """Counts and density (counts / (width * total)) over edges spanning the samples."""
    values = np.asarray(samples, dtype=float).ravel()
    if values.size == 0:
        raise EmptySamplesError()
    if n_bins < 2:
        raise ValueError(f"n_bins must be >= 2, got {n_bins}")
    binning = Binning(binning)

    edges = _bin_edges(values, binning, n_bins)
    counts, edges = np.histogram(values, bins=edges)
    density = counts / (np.diff(edges) * values.size)
    return Histogram(
        bin_edges=edges, counts=counts.astype(np.int64), density=density, binning=binning
    )


def tail_comparison(
    data: Sequence[float], baseline: Sequence[float], quantile: float = 0.95
) -> Dict[str, Any]:
    """
    Fraction of each sample beyond the `quantile` of the baseline sample.
    A thinner data tail shows up as data_tail_mass < baseline_tail_mass.
    """
    data = np.asarray(data, dtype=float)
    baseline = np.asarray(baseline, dtype=float)
    if data.size == 0 or baseline.size == 0:
        raise EmptySamplesError()
    threshold = float(np.quantile(baseline, quantile))
    data_tail = float(np.mean(data > threshold))
    baseline_tail = float(np.mean(baseline > threshold))
    return {
        "quantile": quantile,
        "threshold": threshold,
        "data_tail_mass": data_tail,
        "baseline_tail_mass": baseline_tail,
        "thinner": data_tail < baseline_tail,
    }
