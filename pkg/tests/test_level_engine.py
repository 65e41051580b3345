"""
Tests for stripe width, extremum detection and the bounce/cross classifier.
"""

from collections import defaultdict

import numpy as np
import pytest

from core.exceptions import TooShortError
from core.models.levels import (
    BounceEvent,
    ExitSide,
    Level,
    LevelKind,
    LevelState,
    Outcome,
)
from core.models.market import ResampleMode, TickSeries
from core.services.level_engine import (
    analyze_series,
    classify_events,
    detect_extrema,
    run_day,
    stripe_width,
    track_levels,
)


def scan_extrema(prices):
    """Plateau-aware extrema by walking runs of equal prices one sample at a time."""
    found = []
    n = len(prices)
    i = 1
    while i < n - 1:
        if prices[i] == prices[i - 1]:
            i += 1
            continue
        j = i
        while j + 1 < n and prices[j + 1] == prices[i]:
            j += 1
        if j + 1 < n:
            left, right = prices[i - 1], prices[j + 1]
            if prices[i] > left and prices[i] > right:
                found.append((i, prices[i], LevelKind.RESISTANCE))
            elif prices[i] < left and prices[i] < right:
                found.append((i, prices[i], LevelKind.SUPPORT))
        i = j + 1
    return found


def scan_trials(prices, delta):
    """Forward scan of every level, one sample at a time."""
    trials = []
    for created, value, kind in scan_extrema(prices):
        lower, upper = value - delta / 2, value + delta / 2
        armed_side = None
        entered = None
        bounces = 0
        for i in range(created + 1, len(prices)):
            side = 1 if prices[i] > upper else (-1 if prices[i] < lower else 0)
            if armed_side is None:
                armed_side = side or None
                continue
            if side == 0:
                if entered is None:
                    entered = i
                continue
            if side == armed_side:
                if entered is not None:
                    trials.append(
                        (created, kind, bounces, entered, i, Outcome.BOUNCE)
                    )
                    bounces += 1
                    entered = None
                continue
            if entered is not None:
                trials.append((created, kind, bounces, entered, i, Outcome.CROSS))
            break
    return sorted(trials, key=lambda t: (t[3], t[0]))


def as_tuples(records):
    return [
        (t.level_created_at, t.kind, t.b_prev, t.enter_index, t.exit_index, t.outcome)
        for t in records
    ]


class TestStripeWidth:
    def test_constant_series(self, series_factory):
        assert stripe_width(series_factory([5, 5, 5])) == 0.0

    def test_alternating_series(self, series_factory):
        assert stripe_width(series_factory([10, 11, 10, 11, 10])) == 1.0

    def test_mean_absolute_increment(self, series_factory):
        width = stripe_width(series_factory([100, 103, 101, 106]))

        assert width == pytest.approx(10 / 3)

    def test_too_short(self, series_factory):
        with pytest.raises(TooShortError):
            stripe_width(series_factory([5]))


class TestDetectExtrema:
    def test_single_peak(self, series_factory):
        extrema = detect_extrema(series_factory([1, 3, 2]))

        assert [tuple(e) for e in extrema] == [(1, 3.0, LevelKind.RESISTANCE)]

    def test_monotone_has_none(self, series_factory):
        assert detect_extrema(series_factory([1, 2, 3, 4])) == []

    def test_alternating_extrema(self, series_factory):
        extrema = detect_extrema(series_factory([5, 3, 4, 2, 6]))

        assert [tuple(e) for e in extrema] == [
            (1, 3.0, LevelKind.SUPPORT),
            (2, 4.0, LevelKind.RESISTANCE),
            (3, 2.0, LevelKind.SUPPORT),
        ]

    def test_plateau_indexed_at_first_sample(self, series_factory):
        extrema = detect_extrema(series_factory([1, 3, 3, 3, 2]))

        assert [tuple(e) for e in extrema] == [(1, 3.0, LevelKind.RESISTANCE)]

    def test_shoulder_is_not_an_extremum(self, series_factory):
        assert detect_extrema(series_factory([1, 2, 2, 3])) == []

    def test_matches_run_scan_on_random_paths(self, series_factory):
        rng = np.random.default_rng(17)
        for _ in range(200):
            prices = np.cumsum(rng.integers(-2, 3, rng.integers(3, 40))).astype(float)
            expected = scan_extrema(prices.tolist())

            found = [tuple(e) for e in detect_extrema(series_factory(prices))]

            assert found == expected

    def test_too_short(self, series_factory):
        with pytest.raises(TooShortError):
            detect_extrema(series_factory([1, 2]))


class TestLevel:
    def test_side_of_counts_edges_inside(self):
        level = Level(value=10.0, kind=LevelKind.SUPPORT, half_width=0.5, created_at=0)

        sides = level.side_of([8.0, 9.5, 10.0, 10.5, 10.6, 9.49])

        assert sides.tolist() == [-1, 0, 0, 0, 1, -1]

    def test_zero_width_stripe_holds_only_the_level(self):
        level = Level(
            value=10.0, kind=LevelKind.RESISTANCE, half_width=0.0, created_at=0
        )

        assert level.side_of(np.array([9, 10, 11])).tolist() == [-1, 0, 1]

    def test_broken_level_cannot_bounce(self):
        level = Level(value=10.0, kind=LevelKind.SUPPORT, half_width=0.5, created_at=0)
        level.mark_broken()

        with pytest.raises(ValueError):
            level.record_bounce()


class TestClassifyEvents:
    """Level lifecycle on hand-traced paths and against the forward scan."""

    def test_bounce_on_resistance(self, series_factory):
        trials = classify_events(series_factory([10, 14, 11, 13.6, 9]), delta=1.0)

        assert len(trials) == 1
        trial = trials[0]
        assert trial.level_value == 14.0
        assert trial.kind == LevelKind.RESISTANCE
        assert trial.b_prev == 0
        assert trial.outcome == Outcome.BOUNCE
        assert (trial.enter_index, trial.exit_index) == (3, 4)

    def test_jump_across_support_breaks_it_without_a_trial(self, series_factory):
        levels, trials = track_levels(
            series_factory([10, 14, 11, 13.6, 9]), delta=1.0
        )

        assert [t for t in trials if t.level_value == 11.0] == []
        support = next(level for level in levels if level.value == 11.0)
        assert support.state == LevelState.BROKEN
        assert support.bounces == 0

    def test_jump_beyond_far_edge_breaks_level(self, series_factory):
        levels, trials = track_levels(series_factory([10, 14, 11, 15]), delta=1.0)

        assert trials == []
        level_14 = next(level for level in levels if level.value == 14.0)
        assert level_14.state == LevelState.BROKEN

    def test_jump_after_bounces_keeps_earlier_trials(self, series_factory):
        prices = [10, 14, 11, 14, 11, 16, 14, 11]
        levels, trials = track_levels(series_factory(prices), delta=1.0)

        on_14 = [t for t in trials if t.level_created_at == 1]
        assert [(t.b_prev, t.outcome) for t in on_14] == [(0, Outcome.BOUNCE)]
        level_14 = next(level for level in levels if level.created_at == 1)
        assert level_14.state == LevelState.BROKEN
        assert level_14.bounces == 1

    def test_monotone_series_has_no_trials(self, series_factory):
        assert classify_events(series_factory(range(20)), delta=1.0) == []

    def test_stripe_edges_count_as_inside(self, series_factory):
        # level 14 with delta 2: 13 sits on the lower edge
        trials = classify_events(series_factory([10, 14, 11, 13, 11]), delta=2.0)

        on_14 = [t for t in trials if t.level_value == 14.0]
        assert [(t.outcome, t.enter_index, t.exit_index) for t in on_14] == [
            (Outcome.BOUNCE, 3, 4)
        ]

    def test_unresolved_trial_is_dropped(self, series_factory):
        trials = classify_events(series_factory([10, 14, 11, 14]), delta=1.0)

        assert [t for t in trials if t.level_value == 14.0] == []

    def test_bounce_counts_accumulate(self, series_factory):
        prices = [10, 14, 11, 14, 11, 14, 12, 14, 16]
        trials = classify_events(series_factory(prices), delta=1.0)

        on_14 = [t for t in trials if t.level_value == 14.0 and t.level_created_at == 1]
        assert [(t.b_prev, t.outcome) for t in on_14] == [
            (0, Outcome.BOUNCE),
            (1, Outcome.BOUNCE),
            (2, Outcome.CROSS),
        ]

    def test_trials_ordered_by_enter_index(self, series_factory):
        rng = np.random.default_rng(4)
        prices = 100 + np.cumsum(rng.integers(-1, 2, 500))

        trials = classify_events(series_factory(prices), delta=1.0)

        keys = [(t.enter_index, t.level_created_at) for t in trials]
        assert keys == sorted(keys)
        assert all(t.enter_index < t.exit_index for t in trials)

    def test_negative_delta(self, series_factory):
        with pytest.raises(ValueError):
            classify_events(series_factory([1, 3, 2]), delta=-1.0)

    @pytest.mark.parametrize("delta", [0.5, 1.0, 2.0])
    def test_agrees_with_forward_scan_on_short_paths(self, series_factory, delta):
        rng = np.random.default_rng(int(delta * 100))
        mismatches = 0
        for _ in range(1000):
            length = int(rng.integers(3, 51))
            prices = (50 + np.cumsum(rng.integers(-3, 4, length))).astype(float)

            found = as_tuples(classify_events(series_factory(prices), delta))

            if found != scan_trials(prices.tolist(), delta):
                mismatches += 1
        assert mismatches == 0

    def test_agrees_with_forward_scan_across_chunks(self, series_factory):
        rng = np.random.default_rng(23)
        for _ in range(3):
            prices = (1000 + np.cumsum(rng.integers(-1, 2, 1500))).astype(float)
            delta = stripe_width(series_factory(prices))

            found = as_tuples(classify_events(series_factory(prices), delta))

            assert found == scan_trials(prices.tolist(), delta)

    def test_translation_invariance(self, series_factory):
        rng = np.random.default_rng(8)
        prices = (100 + np.cumsum(rng.integers(-2, 3, 300))).astype(float)

        base = classify_events(series_factory(prices), 1.0)
        shifted = classify_events(series_factory(prices + 1000), 1.0)

        assert as_tuples(base) == as_tuples(shifted)
        assert [t.level_value + 1000 for t in base] == [t.level_value for t in shifted]

    def test_level_lifecycle_invariants(self, series_factory):
        rng = np.random.default_rng(31)
        prices = (200 + np.cumsum(rng.integers(-2, 3, 2000))).astype(float)

        levels, trials = track_levels(series_factory(prices), 1.5)

        by_level = defaultdict(list)
        for trial in trials:
            by_level[trial.level_created_at].append(trial)
        for level in levels:
            history = sorted(by_level[level.created_at], key=lambda t: t.enter_index)
            assert [t.b_prev for t in history] == list(range(len(history)))
            crosses = [t for t in history if t.outcome == Outcome.CROSS]
            assert len(crosses) <= 1
            if crosses:
                assert history[-1].outcome == Outcome.CROSS
                assert level.state == LevelState.BROKEN
            assert level.bounces == len(history) - len(crosses)
            assert all(level.created_at < t.enter_index < t.exit_index for t in history)


class TestDayPipeline:
    def test_monotone_day_has_no_trials(self):
        ticks = TickSeries("ABC", "d1", np.arange(100.0), np.arange(100, 200))

        assert run_day(ticks, 5, ResampleMode.EVENT_TICKS) == []

    def test_trials_carry_provenance(self):
        rng = np.random.default_rng(2)
        prices = 500 + np.cumsum(rng.choice([-1, 1], 3000))
        ticks = TickSeries("XYZ", "d7", np.arange(3000.0), prices)

        trials = run_day(ticks, 2, ResampleMode.PHYSICAL_SECONDS)

        assert trials
        assert {(t.symbol, t.day_id, t.scale) for t in trials} == {("XYZ", "d7", 2)}

    def test_stripe_multiplier_scales_delta(self, series_factory):
        series = series_factory([10, 12, 11, 14, 10])

        assert analyze_series(series, 2.0).delta == pytest.approx(
            2 * analyze_series(series).delta
        )

    def test_non_positive_multiplier(self, series_factory):
        with pytest.raises(ValueError):
            analyze_series(series_factory([10, 12, 11]), 0.0)

    def test_two_sample_series_has_no_trials(self, series_factory):
        result = analyze_series(series_factory([10, 12]))

        assert result.trials == []
        assert result.delta == 2.0


class TestBounceEvent:
    def test_exit_side_follows_outcome(self, series_factory):
        prices = [10, 14, 11, 14, 11, 14, 12, 14, 16]
        trials = classify_events(series_factory(prices), delta=1.0)

        events = [BounceEvent.from_trial(t) for t in trials]

        for event in events:
            assert event.is_bounce == (event.trial.outcome == Outcome.BOUNCE)
            expected = ExitSide.ENTRY_SIDE if event.is_bounce else ExitSide.FAR_SIDE
            assert event.exit_side == expected
