"""
Bayesian estimate of a bounce probability from n bounces out of N trials.

With a uniform prior the posterior of p is Beta(n + 1, N - n + 1).
"""

from typing import Tuple

from core.exceptions.analysis_exceptions import InvalidCountsError


def _check_counts(n: int, total: int):
    if n < 0 or total < 0 or n > total:
        raise InvalidCountsError(n, total)


def bayes_estimate(n: int, total: int) -> Tuple[float, float]:
    """
    Posterior mean and variance of p given n successes in `total` trials.

    mean = (n + 1) / (N + 2)
    variance = (n + 1)(N - n + 1) / ((N + 3)(N + 2)^2)
    """
    _check_counts(n, total)
    mean = (n + 1) / (total + 2)
    variance = (n + 1) * (total - n + 1) / ((total + 3) * (total + 2) ** 2)
    return mean, variance
