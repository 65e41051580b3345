"""
Tick CSV ingestion.

One file holds one symbol-day: a `timestamp,price` header followed by one row per
trade, `#` comment lines allowed. Symbol and day come from the file name stem
`SYMBOL_DAY.csv`.
"""

import re
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np
import pandas as pd
from loguru import logger

from core.exceptions.data_exceptions import (
    NonMonotoneTimestampsError,
    TickFileNotFoundError,
    TickParseError,
    TooShortError,
)
from core.models.market import TickSeries

TICK_COLUMNS = ["timestamp", "price"]

_PANDAS_LINE = re.compile(r"line (\d+)")


def parse_stem(path: Path) -> Tuple[str, str]:
    """Split `SYMBOL_DAY` into its parts. A stem without `_` is all symbol."""
    stem = path.stem
    if "_" not in stem:
        return stem, ""
    symbol, day_id = stem.rsplit("_", 1)
    return symbol, day_id


def load_ticks(path: Union[str, Path]) -> TickSeries:
    """
    Read and validate one tick file.

    Line numbers in errors count data rows (1 = first row after the header).

    Raises:
        TickFileNotFoundError, TickParseError, NonMonotoneTimestampsError,
        TooShortError
    """
    path = Path(path)
    if not path.is_file():
        raise TickFileNotFoundError(str(path))

    try:
        df = pd.read_csv(
            path,
            comment="#",
            dtype=str,
            skip_blank_lines=True,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError:
        raise TooShortError(0, 2, "tick file")
    except pd.errors.ParserError as e:
        match = _PANDAS_LINE.search(str(e))
        line = int(match.group(1)) - 1 if match else 0
        raise TickParseError(line, str(e), str(path))
    except UnicodeDecodeError as e:
        raise TickParseError(0, f"not UTF-8: {e}", str(path))

    df.columns = [str(c).strip() for c in df.columns]
    if list(df.columns) != TICK_COLUMNS:
        raise TickParseError(
            0, f"header must be {','.join(TICK_COLUMNS)}, got {list(df.columns)}"
        )

    timestamps = pd.to_numeric(df["timestamp"].str.strip(), errors="coerce")
    prices = pd.to_numeric(df["price"].str.strip(), errors="coerce")

    bad_ts = np.flatnonzero(timestamps.isna().to_numpy())
    if bad_ts.size:
        row = int(bad_ts[0])
        raise TickParseError(
            row + 1, f"bad timestamp {df['timestamp'].iloc[row]!r}", str(path)
        )

    price_values = prices.to_numpy(dtype=float)
    bad_price = np.flatnonzero(
        np.isnan(price_values)
        | (price_values <= 0)
        | (price_values != np.round(price_values))
    )
    if bad_price.size:
        row = int(bad_price[0])
        raise TickParseError(
            row + 1,
            f"price must be a positive integer tick count, got {df['price'].iloc[row]!r}",
            str(path),
        )

    ts_values = timestamps.to_numpy(dtype=float)
    backwards = np.flatnonzero(np.diff(ts_values) < 0)
    if backwards.size:
        raise NonMonotoneTimestampsError(int(backwards[0]) + 2, str(path))

    if len(df) < 2:
        raise TooShortError(len(df), 2, "tick file")

    symbol, day_id = parse_stem(path)
    logger.debug(f"Loaded {len(df)} ticks for {symbol} {day_id} from {path}")

    return TickSeries(
        symbol=symbol,
        day_id=day_id,
        timestamps=ts_values,
        prices=price_values.astype(np.int64),
    )


def discover_tick_files(path: Union[str, Path]) -> List[Path]:
    """Tick files under a directory (sorted), or the file itself."""
    path = Path(path)
    if path.is_file():
        return [path]
    if not path.exists():
        raise TickFileNotFoundError(str(path))
    return sorted(p for p in path.glob("*.csv") if p.is_file())


def write_ticks(series: TickSeries, path: Union[str, Path]) -> Path:
    """Write a TickSeries in the tick CSV format."""
    path = Path(path)
    timestamps = series.timestamps
    if np.all(timestamps == np.round(timestamps)):
        timestamps = timestamps.astype(np.int64)
    df = pd.DataFrame({"timestamp": timestamps, "price": series.prices})
    df.to_csv(path, index=False, lineterminator="\n")
    return path
