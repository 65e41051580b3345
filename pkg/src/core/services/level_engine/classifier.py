"""
Level lifecycle state machine: every stripe entry resolves to a bounce or a cross.

For a level created at index c, only the samples after c matter, and of those
only the ones strictly outside the stripe. Between two consecutive outside
samples i < j:

  - j > i + 1 and same side       -> Bounce, entered at i + 1, exited at j
  - j > i + 1 and opposite sides  -> Cross, entered at i + 1, exited at j
  - j == i + 1 and opposite sides -> the stripe was jumped: level broken, no trial
  - j == i + 1 and same side      -> nothing happened

The first outside sample after creation is the exit that arms the level, and a
Cross or a jump ends it. Every trial has a sample inside the stripe, so
enter_index < exit_index. Samples inside the stripe after the last outside one
form an unresolved trial and are dropped.
"""

from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from core.models.levels import Level, Outcome, TrialRecord
from core.models.market import ResampledSeries
from core.services.level_engine.extrema import detect_extrema

INITIAL_CHUNK = 256


def _scan_level(
    prices: np.ndarray, level: Level
) -> List[Tuple[int, int, int, Outcome]]:
    """(b_prev, enter_index, exit_index, outcome) for each resolved trial."""
    trials = []
    last: Optional[Tuple[int, int]] = None
    pos = level.created_at + 1
    chunk = INITIAL_CHUNK

    while pos < len(prices) and level.is_active:
        window = prices[pos : pos + chunk]
        sides = level.side_of(window)
        hits = np.flatnonzero(sides)
        idx = pos + hits
        sd = sides[hits]
        if last is not None:
            idx = np.concatenate([[last[0]], idx])
            sd = np.concatenate([[last[1]], sd])

        if len(idx) >= 2:
            gaps = np.diff(idx)
            flipped = sd[1:] != sd[:-1]
            for e in np.flatnonzero((gaps > 1) | flipped):
                if gaps[e] == 1:
                    level.mark_broken()
                    break
                enter_index, exit_index = int(idx[e]) + 1, int(idx[e + 1])
                if flipped[e]:
                    trials.append((level.bounces, enter_index, exit_index, Outcome.CROSS))
                    level.mark_broken()
                    break
                trials.append((level.bounces, enter_index, exit_index, Outcome.BOUNCE))
                level.record_bounce()

        if len(idx):
            last = (int(idx[-1]), int(sd[-1]))
        pos += chunk
        chunk *= 2

    return trials


def track_levels(
    series: ResampledSeries, delta: float
) -> Tuple[List[Level], List[TrialRecord]]:
    """Run the state machine; return every level with its final state and the
    trials ordered by enter index (ties broken by level creation)."""
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")

    levels: List[Level] = []
    records: List[TrialRecord] = []
    for extremum in detect_extrema(series):
        level = Level(
            value=extremum.value,
            kind=extremum.kind,
            half_width=delta / 2.0,
            created_at=extremum.index,
        )
        levels.append(level)
        for b_prev, enter_index, exit_index, outcome in _scan_level(
            series.prices, level
        ):
            records.append(
                TrialRecord(
                    level_value=level.value,
                    kind=level.kind,
                    b_prev=b_prev,
                    outcome=outcome,
                    enter_index=enter_index,
                    exit_index=exit_index,
                    symbol=series.symbol,
                    day_id=series.day_id,
                    scale=series.scale,
                    level_created_at=level.created_at,
                )
            )

    records.sort(key=lambda t: (t.enter_index, t.level_created_at))
    logger.debug(
        f"{series.identity} scale={series.scale}: {len(levels)} levels, "
        f"{len(records)} trials"
    )
    return levels, records


def classify_events(series: ResampledSeries, delta: float) -> List[TrialRecord]:
    """Every resolved stripe entry of the day, ordered by enter_index."""
    _, records = track_levels(series, delta)
    return records
