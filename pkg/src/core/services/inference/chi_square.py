"""
Independence test p(b|b_prev) = c across b_prev classes.
"""

import math
from typing import Sequence

import numpy as np
from scipy.stats import chi2

from core.exceptions.analysis_exceptions import DegenerateVarianceError, InvalidDofError
from core.models.statistics import BounceStats, ChiSquareResult, Decision

INVERSE_VARIANCE = "inverse_variance"
PLAIN_MEAN = "mean"


def chi2_pvalue(statistic: float, dof: int) -> float:
    """Upper-tail probability of the chi-square distribution."""
    if dof < 1:
        raise InvalidDofError(dof)
    if statistic < 0:
        raise ValueError(f"chi-square statistic must be >= 0, got {statistic}")
    if dof == 2:
        return math.exp(-statistic / 2.0)
    return float(chi2.sf(statistic, dof))


def estimate_c(means: np.ndarray, variances: np.ndarray, method: str) -> float:
    if method == INVERSE_VARIANCE:
        weights = 1.0 / variances
        return float(np.sum(weights * means) / np.sum(weights))
    if method == PLAIN_MEAN:
        return float(np.mean(means))
    raise ValueError(f"Unknown c_hat method: {method}")


def chi2_independence(
    stats: Sequence[BounceStats],
    alpha: float = 0.05,
    dof: int = 2,
    c_hat_method: str = INVERSE_VARIANCE,
) -> ChiSquareResult:
    """
    chi2 = sum_b (mean_b - c)^2 / sum_b var_b, a single ratio of sums.

    The per-term form sum_b (mean_b - c)^2 / var_b is reported next to it with
    k - 1 degrees of freedom.
    """
    if len(stats) < 2:
        raise DegenerateVarianceError(
            f"Independence test needs >= 2 classes, got {len(stats)}",
            details={"classes": len(stats)},
        )
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    if dof < 1:
        raise InvalidDofError(dof)

    means = np.array([s.mean for s in stats], dtype=float)
    variances = np.array([s.variance for s in stats], dtype=float)
    zero = [s.b_prev for s in stats if not s.variance > 0]
    if zero:
        raise DegenerateVarianceError(
            f"Zero variance in classes b_prev={zero}", details={"b_prev": zero}
        )

    c_hat = estimate_c(means, variances, getattr(c_hat_method, "value", c_hat_method))
    squared = (means - c_hat) ** 2
    statistic = float(np.sum(squared) / np.sum(variances))
    p_value = chi2_pvalue(statistic, dof)

    conventional = float(np.sum(squared / variances))
    conventional_p = chi2_pvalue(conventional, len(stats) - 1)

    return ChiSquareResult(
        statistic=statistic,
        dof=dof,
        p_value=p_value,
        c_hat=c_hat,
        decision=Decision.REJECTED if p_value < alpha else Decision.ACCEPTED,
        alpha=alpha,
        conventional_statistic=conventional,
        conventional_p_value=conventional_p,
    )
