"""
Result types of the inference operations.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np


class Decision(str, Enum):
    ACCEPTED = "IndependenceAccepted"
    REJECTED = "IndependenceRejected"


@dataclass(frozen=True)
class BounceStats:
    """Pooled counts for one b_prev class and the Bayesian estimate of p(b|b_prev)."""

    b_prev: int
    bounces: int
    trials: int
    mean: float
    variance: float

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)

    @property
    def frequency(self) -> Optional[float]:
        """Raw bounce frequency n/N, None without trials."""
        return self.bounces / self.trials if self.trials else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "b_prev": self.b_prev,
            "n": self.bounces,
            "N": self.trials,
            "mean": self.mean,
            "variance": self.variance,
        }


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    dof: int
    p_value: float
    c_hat: float
    decision: Decision
    alpha: float = 0.05
    # Per-term statistic sum((mean_b - c)^2 / var_b), reported as a diagnostic
    conventional_statistic: Optional[float] = None
    conventional_p_value: Optional[float] = None

    @property
    def rejected(self) -> bool:
        return self.decision == Decision.REJECTED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chi2": self.statistic,
            "dof": self.dof,
            "p_value": self.p_value,
            "c_hat": self.c_hat,
            "decision": self.decision.value,
            "alpha": self.alpha,
            "conventional_chi2": self.conventional_statistic,
            "conventional_p_value": self.conventional_p_value,
        }


@dataclass(frozen=True, eq=False)
class HurstEstimate:
    """DFA-1 fit: hurst is the slope of ln sigma(n) against ln n."""

    hurst: float
    window_sizes: np.ndarray
    fluctuations: np.ndarray
    fit_slope: float
    fit_intercept: float
    fit_stderr: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "hurst": self.hurst,
            "window_sizes": self.window_sizes.tolist(),
            "fluctuations": self.fluctuations.tolist(),
            "fit_slope": self.fit_slope,
            "fit_intercept": self.fit_intercept,
            "fit_stderr": self.fit_stderr,
        }


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    amplitude: float
    fit_range: Tuple[float, float]
    r_squared: float
    bins_used: int = field(default=0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "exponent": self.exponent,
            "amplitude": self.amplitude,
            "fit_range": list(self.fit_range),
            "r_squared": self.r_squared,
            "bins_used": self.bins_used,
        }
