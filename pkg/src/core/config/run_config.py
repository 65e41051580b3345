"""
Run configuration: defaults < config file < command-line overrides.

The config file is flat `key = value` text with `#` comments, parsed with
python-dotenv so quoting and comment handling match `.env` files.
"""

from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple

from dotenv import dotenv_values
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from core.exceptions.system_exceptions import ConfigurationError
from core.models.features import Binning
from core.models.market import ResampleMode, SurrogateKind

DEFAULT_SCALES = (45, 60, 90, 180)


class CHatMethod(str, Enum):
    INVERSE_VARIANCE = "inverse_variance"
    MEAN = "mean"


class PairMode(str, Enum):
    CONSECUTIVE = "consecutive"
    BOUNCE_BOUNCE = "bounce_bounce"


def _parse_mode(value: Any) -> Any:
    """Accept "seconds"/"ticks" as well as "PhysicalSeconds"/"EventTicks"."""
    if isinstance(value, str):
        key = value.strip()
        for mode in ResampleMode:
            if key in (mode.name, mode.name.title().replace("_", "")):
                return mode
    return value


class RunConfig(BaseModel):
    """Everything one `bounce-lab` command needs."""

    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    input: Optional[Path] = None
    scales: List[int] = Field(default_factory=lambda: list(DEFAULT_SCALES))
    mode: ResampleMode = ResampleMode.PHYSICAL_SECONDS
    max_b: int = Field(default=4, ge=1)
    alpha: float = Field(default=0.05, gt=0.0, lt=1.0)
    dof: int = Field(default=2, ge=1)
    stripe_multiplier: float = Field(default=1.0, gt=0.0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    output_dir: Path = Path("output")
    workers: Optional[int] = Field(default=None, ge=1)

    hurst_window_min: int = 8
    hurst_window_max: Optional[int] = None
    hurst_n_windows: int = Field(default=16, ge=2)
    c_hat_method: CHatMethod = CHatMethod.INVERSE_VARIANCE

    pair_mode: PairMode = PairMode.CONSECUTIVE
    binning: Binning = Binning.LOGARITHMIC
    n_bins: int = Field(default=20, ge=2)
    fit_min: Optional[float] = None
    fit_max: Optional[float] = None
    shuffled_baseline: bool = True

    surrogate_kind: Optional[SurrogateKind] = None
    surrogate_days: int = Field(default=1, ge=1)
    surrogate_length: int = Field(default=23400, gt=0)
    surrogate_hurst: Optional[float] = None
    surrogate_level_spacing: int = 1
    surrogate_bounce_bias: Optional[float] = None
    # None: generated days follow the analysis scale
    surrogate_interval: Optional[float] = Field(default=None, gt=0.0)
    surrogate_volatility: float = 1.0
    surrogate_start_price: float = 10000.0
    surrogate_source: SurrogateKind = SurrogateKind.FRACTIONAL_WALK

    @field_validator("scales", mode="before")
    @classmethod
    def _split_scales(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [int(part) for part in value.split(",") if part.strip()]
        return value

    @field_validator("scales")
    @classmethod
    def _check_scales(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("scales must not be empty")
        if any(scale < 1 for scale in value):
            raise ValueError(f"scales must be positive, got {value}")
        return value

    @field_validator("mode", mode="before")
    @classmethod
    def _mode_alias(cls, value: Any) -> Any:
        return _parse_mode(value)

    @property
    def fit_range(self) -> Optional[Tuple[float, float]]:
        if self.fit_min is None and self.fit_max is None:
            return None
        return (
            self.fit_min if self.fit_min is not None else 0.0,
            self.fit_max if self.fit_max is not None else float("inf"),
        )

    @property
    def uses_surrogates(self) -> bool:
        return self.surrogate_kind is not None

    @classmethod
    def load(
        cls,
        config_file: Optional[Path] = None,
        overrides: Optional[Mapping[str, Any]] = None,
        defaults: Optional[Mapping[str, Any]] = None,
    ) -> "RunConfig":
        """
        Merge `defaults` < config file < `overrides` on top of the field defaults.

        Raises:
            ConfigurationError: unreadable file, unknown key or invalid value
        """
        values: Dict[str, Any] = dict(defaults or {})
        if config_file is not None:
            values.update(read_config_file(config_file))
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value

        unknown = sorted(set(values) - set(cls.model_fields))
        if unknown:
            raise ConfigurationError(
                f"Unknown configuration keys: {', '.join(unknown)}",
                details={"keys": unknown},
            )

        try:
            run_config = cls(**values)
        except ValidationError as e:
            problems = [
                f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
                for err in e.errors()
            ]
            raise ConfigurationError(
                f"Invalid configuration: {'; '.join(problems)}",
                details={"errors": problems},
            ) from e

        logger.debug(f"Run configuration loaded: {run_config.model_dump(mode='json')}")
        return run_config


def read_config_file(path: Path) -> Dict[str, Any]:
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(
            f"Config file not found: {path}", details={"path": str(path)}
        )
    raw = dotenv_values(path)
    values: Dict[str, Any] = {}
    for key, value in raw.items():
        if value is None or value == "":
            # `key =` leaves the default in place
            continue
        values[key.strip()] = value
    return values
