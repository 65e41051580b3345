"""
Market data: tick ingestion, resampling and surrogate generation.
"""

from core.services.market_data.day_source import resolve_days
from core.services.market_data.fractional import gen_fractional_walk
from core.services.market_data.resampler import resample
from core.services.market_data.sticky import gen_sticky_level
from core.services.market_data.surrogates import (
    generate_surrogate,
    scale_matched_ticks,
    shuffle_returns,
    shuffle_ticks,
    to_tick_series,
)
from core.services.market_data.tick_loader import (
    discover_tick_files,
    load_ticks,
    write_ticks,
)

__all__ = [
    "load_ticks",
    "discover_tick_files",
    "write_ticks",
    "resample",
    "shuffle_returns",
    "shuffle_ticks",
    "gen_fractional_walk",
    "gen_sticky_level",
    "generate_surrogate",
    "to_tick_series",
    "scale_matched_ticks",
    "resolve_days",
]
