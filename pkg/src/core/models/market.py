"""
Market data models: raw tick records, resampled price paths and surrogate specs.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from core.exceptions.data_exceptions import (
    InvalidTickSeriesError,
    NonMonotoneTimestampsError,
    TooShortError,
)


class ResampleMode(str, Enum):
    EVENT_TICKS = "ticks"
    PHYSICAL_SECONDS = "seconds"


class SurrogateKind(str, Enum):
    SHUFFLED_RETURNS = "ShuffledReturns"
    FRACTIONAL_WALK = "FractionalWalk"
    STICKY_LEVEL = "StickyLevel"


@dataclass(frozen=True, eq=False)
class TickSeries:
    """Tick-by-tick record of one symbol-day. Prices are integer ticks."""

    symbol: str
    day_id: str
    timestamps: np.ndarray
    prices: np.ndarray

    def __post_init__(self):
        timestamps = np.asarray(self.timestamps, dtype=float)
        prices = np.asarray(self.prices, dtype=np.int64)
        object.__setattr__(self, "timestamps", timestamps)
        object.__setattr__(self, "prices", prices)

        if len(timestamps) != len(prices):
            raise InvalidTickSeriesError(
                "timestamps and prices differ in length",
                {"timestamps": len(timestamps), "prices": len(prices)},
            )
        if len(prices) < 2:
            raise TooShortError(len(prices), 2, "tick series")
        backwards = np.flatnonzero(np.diff(timestamps) < 0)
        if backwards.size:
            raise NonMonotoneTimestampsError(int(backwards[0]) + 2)
        if np.any(prices <= 0):
            first = int(np.flatnonzero(prices <= 0)[0])
            raise InvalidTickSeriesError(
                "prices must be positive", {"index": first, "price": int(prices[first])}
            )

    @property
    def identity(self) -> str:
        return f"{self.symbol}_{self.day_id}"

    @property
    def duration(self) -> float:
        """Session duration in seconds (last event time since session open)."""
        return float(self.timestamps[-1])

    def __len__(self) -> int:
        return len(self.prices)


@dataclass(frozen=True, eq=False)
class ResampledSeries:
    """Price path P_tau sampled at one time scale; all level logic runs on it."""

    scale: int
    mode: ResampleMode
    prices: np.ndarray
    symbol: str = "SYNTH"
    day_id: str = "d001"

    def __post_init__(self):
        object.__setattr__(self, "prices", np.asarray(self.prices, dtype=float))

    @property
    def increments(self) -> np.ndarray:
        return np.diff(self.prices)

    @property
    def identity(self) -> str:
        return f"{self.symbol}_{self.day_id}"

    def with_prices(self, prices: np.ndarray) -> "ResampledSeries":
        """Same provenance, different path."""
        return ResampledSeries(
            scale=self.scale,
            mode=self.mode,
            prices=prices,
            symbol=self.symbol,
            day_id=self.day_id,
        )

    def __len__(self) -> int:
        return len(self.prices)


class SurrogateSpec(BaseModel):
    """Parameters of one seeded surrogate day."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "kind": "StickyLevel",
                "seed": 7,
                "length": 510,
                "level_spacing": 1,
                "bounce_bias": 0.8,
            }
        },
    )

    kind: SurrogateKind = Field(..., description="Surrogate family")
    seed: int = Field(..., ge=0, lt=2**64, description="64-bit seed")
    length: int = Field(..., gt=0, description="Number of prices")
    hurst: Optional[float] = Field(None, description="FractionalWalk Hurst exponent")
    level_spacing: int = Field(1, description="StickyLevel grid step in ticks")
    bounce_bias: Optional[float] = Field(None, description="StickyLevel bias")
    volatility: float = Field(1.0, gt=0, description="Increment scale in ticks")
    start_price: float = Field(10000.0, gt=0, description="Opening price in ticks")
    source: SurrogateKind = Field(
        SurrogateKind.FRACTIONAL_WALK,
        description="Generator whose returns ShuffledReturns permutes",
    )
    symbol: str = "SYNTH"
    day_id: str = "d001"
