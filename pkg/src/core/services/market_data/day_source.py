"""
Resolve a run's input into the list of symbol-days it covers.

A DaySource is a small picklable recipe (a file path or a surrogate spec) so the
days themselves are loaded or generated inside the worker that analyses them.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from loguru import logger

from core.config.run_config import RunConfig
from core.exceptions.data_exceptions import NoInputDaysError
from core.models.market import (
    ResampledSeries,
    ResampleMode,
    SurrogateKind,
    SurrogateSpec,
    TickSeries,
)
from core.services.market_data.surrogates import (
    generate_surrogate,
    scale_matched_ticks,
    shuffle_ticks,
    to_tick_series,
)
from core.services.market_data.tick_loader import (
    discover_tick_files,
    load_ticks,
    parse_stem,
)
from core.utils.seeds import spawn_seeds

SURROGATE_SYMBOL = "SYNTH"


@dataclass(frozen=True)
class DaySource:
    """
    Recipe of one symbol-day. A generated day with no fixed `interval` follows
    the analysis scale: it is materialized once per scale so that resampling
    returns the generated path step for step.
    """

    symbol: str
    day_id: str
    path: Optional[Path] = None
    spec: Optional[SurrogateSpec] = None
    interval: Optional[float] = None
    shuffle_seed: Optional[int] = None

    @property
    def sort_key(self):
        return (self.symbol, self.day_id)

    @property
    def follows_scale(self) -> bool:
        return self.spec is not None and self.interval is None

    def generate(self) -> ResampledSeries:
        return generate_surrogate(self.spec)

    def load(
        self, scale: int = 1, mode: ResampleMode = ResampleMode.EVENT_TICKS
    ) -> TickSeries:
        """Tick record; `scale` and `mode` apply to days that follow the scale."""
        if self.follows_scale:
            ticks = scale_matched_ticks(self.generate(), scale, mode)
        elif self.spec is not None:
            ticks = to_tick_series(self.generate(), self.interval)
        else:
            ticks = load_ticks(self.path)
        if self.shuffle_seed is not None:
            ticks = shuffle_ticks(ticks, self.shuffle_seed)
        return ticks


def surrogate_day_id(index: int) -> str:
    return f"d{index + 1:03d}"


def surrogate_specs(config: RunConfig) -> List[SurrogateSpec]:
    """One spec per generated day; day i is seeded by the i-th spawned child."""
    seeds = spawn_seeds(config.seed, config.surrogate_days)
    return [
        SurrogateSpec(
            kind=config.surrogate_kind,
            seed=seed,
            length=config.surrogate_length,
            hurst=config.surrogate_hurst,
            level_spacing=config.surrogate_level_spacing,
            bounce_bias=config.surrogate_bounce_bias,
            volatility=config.surrogate_volatility,
            start_price=config.surrogate_start_price,
            source=config.surrogate_source,
            symbol=SURROGATE_SYMBOL,
            day_id=surrogate_day_id(i),
        )
        for i, seed in enumerate(seeds)
    ]


def resolve_days(config: RunConfig) -> List[DaySource]:
    """
    Input days sorted by (symbol, day).

    Tick files come from `config.input`. With `surrogate_kind` set and no input,
    `surrogate_days` days are generated; ShuffledReturns with an input shuffles
    each input day instead.

    Raises:
        NoInputDaysError: nothing to analyse
        TickFileNotFoundError: input path does not exist
    """
    if config.input is not None:
        files = discover_tick_files(config.input)
        if not files:
            raise NoInputDaysError(str(config.input))

        shuffle = config.surrogate_kind == SurrogateKind.SHUFFLED_RETURNS
        seeds = spawn_seeds(config.seed, len(files)) if shuffle else [None] * len(files)
        days = []
        for path, seed in zip(files, seeds):
            symbol, day_id = parse_stem(path)
            days.append(
                DaySource(symbol=symbol, day_id=day_id, path=path, shuffle_seed=seed)
            )
        logger.info(f"Resolved {len(days)} input days from {config.input}")
        return sorted(days, key=lambda d: d.sort_key)

    if not config.uses_surrogates:
        raise NoInputDaysError("no input path and no surrogate kind configured")

    days = [
        DaySource(
            symbol=spec.symbol,
            day_id=spec.day_id,
            spec=spec,
            interval=config.surrogate_interval,
        )
        for spec in surrogate_specs(config)
    ]
    logger.info(
        f"Resolved {len(days)} {config.surrogate_kind.value} surrogate days "
        f"(seed={config.seed})"
    )
    return days
