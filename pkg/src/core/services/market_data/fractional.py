"""
Fractional Gaussian noise and fractional random walks.

Davies-Harte circulant embedding is exact and O(n log n); when the embedding has
negative eigenvalues the Hosking (Durbin-Levinson) recursion takes over, which is
exact as well but O(n^2).
"""

import numpy as np
from loguru import logger

from core.exceptions.data_exceptions import (
    InvalidHurstError,
    InvalidSurrogateSpecError,
    TooShortError,
)
from core.models.market import (
    ResampledSeries,
    ResampleMode,
    SurrogateKind,
    SurrogateSpec,
)

MIN_WALK_LENGTH = 64


class EmbeddingFailed(Exception):
    """The circulant embedding is not non-negative definite."""


def fgn_autocovariance(n: int, hurst: float) -> np.ndarray:
    """gamma(k), k = 0..n-1, of unit-variance fractional Gaussian noise."""
    k = np.arange(n, dtype=float)
    two_h = 2.0 * hurst
    return 0.5 * (
        np.abs(k + 1) ** two_h - 2.0 * np.abs(k) ** two_h + np.abs(k - 1) ** two_h
    )


def fgn_davies_harte(n: int, hurst: float, rng: np.random.Generator) -> np.ndarray:
    gamma = fgn_autocovariance(n + 1, hurst)
    row = np.concatenate([gamma, gamma[-2:0:-1]])
    m = len(row)
    eigenvalues = np.fft.fft(row).real
    if np.any(eigenvalues < -1e-10 * np.abs(eigenvalues).max()):
        raise EmbeddingFailed(f"negative circulant eigenvalue for H={hurst}")
    eigenvalues = np.clip(eigenvalues, 0.0, None)

    noise = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    # Re(FFT) of the scaled complex noise has covariance exactly row[j - l]
    return np.fft.fft(np.sqrt(eigenvalues / m) * noise).real[:n]


def fgn_hosking(n: int, hurst: float, rng: np.random.Generator) -> np.ndarray:
    gamma = fgn_autocovariance(n, hurst)
    eps = rng.standard_normal(n)
    x = np.empty(n)
    x[0] = eps[0]
    phi = np.zeros(0)
    v = gamma[0]
    for t in range(1, n):
        k = (gamma[t] - np.dot(phi, gamma[t - 1 : 0 : -1])) / v
        phi = np.concatenate([phi - k * phi[::-1], [k]])
        v *= 1.0 - k * k
        x[t] = np.dot(phi, x[t - 1 :: -1]) + np.sqrt(v) * eps[t]
    return x


def fractional_noise(n: int, hurst: float, rng: np.random.Generator) -> np.ndarray:
    """Unit-variance fGn of length n."""
    try:
        return fgn_davies_harte(n, hurst, rng)
    except EmbeddingFailed as e:
        logger.warning(f"Circulant embedding failed ({e}), using Hosking recursion")
        return fgn_hosking(n, hurst, rng)


def gen_fractional_walk(spec: SurrogateSpec) -> ResampledSeries:
    """
    Cumulative sum of fGn: start_price + volatility * cumsum(fgn).

    Raises:
        InvalidHurstError: hurst missing or outside (0, 1)
        TooShortError: length < 64
    """
    if spec.kind not in (SurrogateKind.FRACTIONAL_WALK, SurrogateKind.SHUFFLED_RETURNS):
        raise InvalidSurrogateSpecError(
            f"gen_fractional_walk cannot build {spec.kind.value}"
        )
    hurst = spec.hurst
    if hurst is None or not 0.0 < hurst < 1.0:
        raise InvalidHurstError(hurst)
    if spec.length < MIN_WALK_LENGTH:
        raise TooShortError(spec.length, MIN_WALK_LENGTH, "fractional walk")

    rng = np.random.default_rng(spec.seed)
    noise = fractional_noise(spec.length, hurst, rng)
    prices = spec.start_price + spec.volatility * np.cumsum(noise)

    return ResampledSeries(
        scale=1,
        mode=ResampleMode.EVENT_TICKS,
        prices=prices,
        symbol=spec.symbol,
        day_id=spec.day_id,
    )
