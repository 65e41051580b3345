"""
Core models module - value types shared by the analysis services.
"""

from core.models.features import (
    FEATURE_CSV_COLUMNS,
    Binning,
    BounceFeature,
    Histogram,
)
from core.models.levels import (
    TRIAL_CSV_COLUMNS,
    BounceEvent,
    ExitSide,
    Level,
    LevelKind,
    LevelState,
    Outcome,
    TrialRecord,
)
from core.models.market import (
    ResampledSeries,
    ResampleMode,
    SurrogateKind,
    SurrogateSpec,
    TickSeries,
)
from core.models.statistics import (
    BounceStats,
    ChiSquareResult,
    Decision,
    HurstEstimate,
    PowerLawFit,
)

__all__ = [
    "TickSeries",
    "ResampledSeries",
    "ResampleMode",
    "SurrogateKind",
    "SurrogateSpec",
    "Level",
    "LevelKind",
    "LevelState",
    "Outcome",
    "ExitSide",
    "TrialRecord",
    "BounceEvent",
    "TRIAL_CSV_COLUMNS",
    "BounceStats",
    "ChiSquareResult",
    "Decision",
    "HurstEstimate",
    "PowerLawFit",
    "BounceFeature",
    "Histogram",
    "Binning",
    "FEATURE_CSV_COLUMNS",
]
