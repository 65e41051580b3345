"""
Inference: Bayesian bounce probabilities, independence test, DFA, power laws.
"""

from core.services.inference.aggregation import (
    TrialCounts,
    aggregate_trials,
    count_trials,
)
from core.services.inference.bayes import bayes_estimate
from core.services.inference.chi_square import chi2_independence, chi2_pvalue
from core.services.inference.dfa import dfa_hurst
from core.services.inference.power_law import powerlaw_fit

__all__ = [
    "bayes_estimate",
    "TrialCounts",
    "count_trials",
    "aggregate_trials",
    "chi2_pvalue",
    "chi2_independence",
    "dfa_hurst",
    "powerlaw_fit",
]
