"""
Tests for tick ingestion, resampling and the shuffled-returns surrogate.
"""

import numpy as np
import pytest

from core.exceptions import (
    DataException,
    ExceptionCode,
    InvalidTickSeriesError,
    NonMonotoneTimestampsError,
    ScaleTooLargeError,
    TickFileNotFoundError,
    TickParseError,
    TooShortError,
)
from core.models.market import ResampleMode, TickSeries
from core.services.market_data import (
    discover_tick_files,
    load_ticks,
    resample,
    shuffle_returns,
    shuffle_ticks,
    write_ticks,
)
from core.services.market_data.tick_loader import parse_stem


class TestLoadTicks:
    """Tick CSV parsing and validation."""

    def test_parses_valid_file(self, tick_file):
        path = tick_file([(0, 100), (1, 101), (3, 100)])

        ticks = load_ticks(path)

        assert len(ticks) == 3
        assert ticks.symbol == "ABC"
        assert ticks.day_id == "20020102"
        assert ticks.prices.tolist() == [100, 101, 100]
        assert ticks.timestamps.tolist() == [0.0, 1.0, 3.0]

    def test_backwards_timestamp_reports_line(self, tick_file):
        path = tick_file([(0, 100), (2, 101), (1, 99)])

        with pytest.raises(NonMonotoneTimestampsError) as exc_info:
            load_ticks(path)

        assert exc_info.value.details["line"] == 3

    def test_empty_file_is_too_short(self, tmp_path):
        path = tmp_path / "ABC_d1.csv"
        path.write_text("", encoding="utf-8")

        with pytest.raises(TooShortError):
            load_ticks(path)

    def test_header_only_is_too_short(self, tick_file):
        with pytest.raises(TooShortError):
            load_ticks(tick_file([]))

    def test_single_row_is_too_short(self, tick_file):
        with pytest.raises(TooShortError):
            load_ticks(tick_file([(0, 100)]))

    def test_missing_file(self, tmp_path):
        with pytest.raises(TickFileNotFoundError):
            load_ticks(tmp_path / "missing.csv")

    def test_wrong_header(self, tick_file):
        with pytest.raises(TickParseError):
            load_ticks(tick_file([(0, 100), (1, 101)], header="time,value"))

    def test_non_integer_price_reports_row(self, tick_file):
        path = tick_file([(0, 100), (1, "100.5"), (2, 101)])

        with pytest.raises(TickParseError) as exc_info:
            load_ticks(path)

        assert exc_info.value.details["line"] == 2

    def test_non_positive_price(self, tick_file):
        with pytest.raises(TickParseError):
            load_ticks(tick_file([(0, 100), (1, 0)]))

    def test_bad_timestamp(self, tick_file):
        with pytest.raises(TickParseError):
            load_ticks(tick_file([(0, 100), ("noon", 101)]))

    def test_comment_lines_are_skipped(self, tmp_path):
        path = tmp_path / "XYZ_d2.csv"
        path.write_text(
            "# exported feed\ntimestamp,price\n0,50\n# gap\n5,51\n", encoding="utf-8"
        )

        ticks = load_ticks(path)

        assert ticks.prices.tolist() == [50, 51]

    def test_write_then_load_keeps_ticks(self, tmp_path):
        original = TickSeries("ABC", "d001", np.array([0.0, 1.0, 4.0]), [7, 8, 6])

        loaded = load_ticks(write_ticks(original, tmp_path / "ABC_d001.csv"))

        assert loaded.prices.tolist() == [7, 8, 6]
        assert loaded.timestamps.tolist() == [0.0, 1.0, 4.0]

    def test_discover_sorts_csv_files(self, tmp_path, tick_file):
        tick_file([(0, 1), (1, 2)], name="B_d1.csv")
        tick_file([(0, 1), (1, 2)], name="A_d1.csv")
        (tmp_path / "notes.txt").write_text("x", encoding="utf-8")

        files = discover_tick_files(tmp_path)

        assert [f.name for f in files] == ["A_d1.csv", "B_d1.csv"]

    def test_parse_stem(self, tmp_path):
        assert parse_stem(tmp_path / "VOD_L_2002-01-02.csv") == ("VOD_L", "2002-01-02")
        assert parse_stem(tmp_path / "plain.csv") == ("plain", "")


class TestTickSeries:
    """Construction-time checks on tick arrays."""

    def test_unequal_lengths(self):
        with pytest.raises(InvalidTickSeriesError) as exc_info:
            TickSeries("ABC", "d1", np.array([0.0, 1.0, 2.0]), [5, 6])

        assert exc_info.value.code == ExceptionCode.INVALID_TICKS.value
        assert exc_info.value.details == {"timestamps": 3, "prices": 2}

    @pytest.mark.parametrize("bad_price", [0, -3])
    def test_non_positive_price(self, bad_price):
        with pytest.raises(InvalidTickSeriesError) as exc_info:
            TickSeries("ABC", "d1", np.array([0.0, 1.0, 2.0]), [5, bad_price, 6])

        assert str(exc_info.value).startswith("[DATA_1010]")
        assert exc_info.value.details["index"] == 1

    def test_is_a_data_exception(self):
        with pytest.raises(DataException):
            TickSeries("ABC", "d1", np.array([0.0, 1.0]), [5])


class TestResample:
    """Event-tick and physical-second sampling."""

    @staticmethod
    def _ticks(timestamps, prices):
        return TickSeries("ABC", "d1", np.asarray(timestamps, float), prices)

    def test_event_ticks_floor(self):
        ticks = self._ticks(range(10), list(range(101, 111)))

        series = resample(ticks, 3, ResampleMode.EVENT_TICKS)

        # events 3, 6 and 9 (1-based)
        assert series.prices.tolist() == [103.0, 106.0, 109.0]

    def test_event_ticks_scale_one_is_identity(self):
        prices = [5, 7, 6, 9, 8]
        ticks = self._ticks(range(5), prices)

        series = resample(ticks, 1, ResampleMode.EVENT_TICKS)

        assert series.prices.tolist() == [float(p) for p in prices]

    def test_physical_seconds_last_price_before(self):
        ticks = self._ticks([0, 50, 130], [5, 7, 6])

        series = resample(ticks, 60, ResampleMode.PHYSICAL_SECONDS)

        assert series.prices.tolist() == [7.0, 7.0]
        assert series.scale == 60
        assert series.identity == "ABC_d1"

    def test_scale_too_large(self):
        ticks = self._ticks([0, 50, 130], [5, 7, 6])

        with pytest.raises(ScaleTooLargeError):
            resample(ticks, 90, ResampleMode.PHYSICAL_SECONDS)

    def test_non_positive_scale(self):
        ticks = self._ticks([0, 1, 2], [5, 7, 6])

        with pytest.raises(ValueError):
            resample(ticks, 0, ResampleMode.EVENT_TICKS)


class TestShuffleReturns:
    """Permutation invariants and determinism of the shuffled surrogate."""

    def test_preserves_endpoints_and_increments(self, series_factory):
        series = series_factory([10, 12, 11])

        for seed in range(5):
            shuffled = shuffle_returns(series, seed)
            assert shuffled.prices[0] == 10
            assert shuffled.prices[-1] == 11
            assert sorted(np.diff(shuffled.prices)) == [-1.0, 2.0]

    def test_constant_series_unchanged(self, series_factory):
        series = series_factory([5, 5, 5, 5])

        for seed in (0, 1, 2**63):
            assert shuffle_returns(series, seed).prices.tolist() == [5.0] * 4

    def test_same_seed_same_output(self, series_factory):
        rng = np.random.default_rng(3)
        series = series_factory(100 + np.cumsum(rng.integers(-2, 3, 200)))

        first = shuffle_returns(series, 42)
        second = shuffle_returns(series, 42)

        np.testing.assert_array_equal(first.prices, second.prices)
        assert first.identity == series.identity

    def test_too_short(self, series_factory):
        with pytest.raises(TooShortError):
            shuffle_returns(series_factory([1, 2]), 0)

    def test_shuffle_ticks_keeps_timestamps(self):
        ticks = TickSeries("ABC", "d1", np.arange(6.0), [10, 11, 13, 12, 12, 14])

        shuffled = shuffle_ticks(ticks, 9)

        np.testing.assert_array_equal(shuffled.timestamps, ticks.timestamps)
        assert shuffled.prices[0] == 10
        assert shuffled.prices[-1] == 14
