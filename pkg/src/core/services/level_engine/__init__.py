"""
Level engine: support/resistance detection and bounce/cross classification.
"""

from core.services.level_engine.classifier import classify_events, track_levels
from core.services.level_engine.extrema import Extremum, detect_extrema, stripe_width
from core.services.level_engine.pipeline import (
    DayResult,
    analyze_day,
    analyze_series,
    run_day,
)

__all__ = [
    "stripe_width",
    "detect_extrema",
    "Extremum",
    "classify_events",
    "track_levels",
    "DayResult",
    "analyze_series",
    "analyze_day",
    "run_day",
]
