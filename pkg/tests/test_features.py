"""
Tests for bounce features, histograms and power-law fits.
"""

import numpy as np
import pytest

from core.exceptions import EmptySamplesError, PathMismatchError, TooFewBinsError
from core.models.features import Binning
from core.models.levels import LevelKind, Outcome, TrialRecord
from core.services.features import build_histogram, extract_features, tail_comparison
from core.services.inference import powerlaw_fit
from core.services.level_engine import classify_events


def resistance_trial(enter, exit, outcome=Outcome.BOUNCE, b_prev=0, level=14.0):
    return TrialRecord(
        level_value=level,
        kind=LevelKind.RESISTANCE,
        b_prev=b_prev,
        outcome=outcome,
        enter_index=enter,
        exit_index=exit,
        symbol="TEST",
        day_id="d001",
        scale=1,
        level_created_at=1,
    )


def power_law_samples(size, seed=0):
    """Inverse-CDF draws from a density proportional to x^-1.5 on [1, 100]."""
    u = np.random.default_rng(seed).random(size)
    return (1.0 - u * (1.0 - 100**-0.5)) ** -2


class TestExtractFeatures:
    def test_recurrence_and_excursion(self, series_factory):
        series = series_factory([10, 14, 14, 12, 11, 9, 12, 14, 16])
        trials = [
            resistance_trial(2, 3),
            resistance_trial(7, 8, Outcome.CROSS, b_prev=1),
        ]

        features = extract_features(series, trials)

        assert len(features) == 1
        assert features[0].recurrence_time == 4
        assert features[0].max_excursion == 5.0
        assert features[0].kind == LevelKind.RESISTANCE

    def test_single_trial_gives_nothing(self, series_factory):
        series = series_factory([10, 14, 11, 13.6, 9])

        assert extract_features(series, [resistance_trial(3, 4)]) == []

    def test_immediate_reentry(self, series_factory):
        series = series_factory([10, 14, 11, 14, 12.5, 14, 11])
        trials = [resistance_trial(3, 4), resistance_trial(5, 6, b_prev=1)]

        features = extract_features(series, trials)

        assert [(f.recurrence_time, f.max_excursion) for f in features] == [(1, 1.5)]

    def test_from_classified_path(self, series_factory):
        series = series_factory([10, 14, 11, 14, 11, 14, 12, 14, 16])
        trials = classify_events(series, delta=1.0)

        features = extract_features(series, trials)

        assert sorted((f.recurrence_time, f.max_excursion) for f in features) == [
            (1, 2.0),
            (1, 2.0),
            (1, 3.0),
        ]
        assert {f.level_value for f in features} == {14.0}

    def test_bounce_bounce_pairs_only(self, series_factory):
        series = series_factory([10, 14, 11, 14, 11, 14, 12, 14, 16])
        trials = classify_events(series, delta=1.0)

        features = extract_features(series, trials, pair_mode="bounce_bounce")

        assert [(f.recurrence_time, f.max_excursion) for f in features] == [(1, 3.0)]

    def test_unknown_pair_mode(self, series_factory):
        with pytest.raises(ValueError):
            extract_features(series_factory([1, 2, 3]), [], pair_mode="any")

    def test_index_outside_path(self, series_factory):
        series = series_factory([10, 14, 11, 13.6, 9])

        with pytest.raises(PathMismatchError):
            extract_features(series, [resistance_trial(3, 20)])


class TestBuildHistogram:
    def test_identical_samples_fill_one_bin(self):
        for binning in Binning:
            histogram = build_histogram([1, 1, 1, 1], binning, 20)

            assert histogram.counts.tolist() == [4]
            assert histogram.total == 4

    def test_exponential_first_bin(self):
        samples = np.random.default_rng(12).exponential(1.0, 10_000)

        histogram = build_histogram(samples, Binning.LINEAR, 20)

        low = samples.min()
        width = histogram.bin_edges[1] - histogram.bin_edges[0]
        expected = (np.exp(-low) - np.exp(-(low + width))) / width
        assert histogram.density[0] == pytest.approx(expected, rel=0.05)

    def test_density_normalized(self):
        samples = np.random.default_rng(1).lognormal(size=5000)

        for binning in Binning:
            histogram = build_histogram(samples, binning, 25)
            area = np.sum(histogram.density * np.diff(histogram.bin_edges))
            assert area == pytest.approx(1.0)

    def test_integer_log_bins_have_half_integer_edges(self):
        samples = np.random.default_rng(5).integers(1, 500, 2000)

        histogram = build_histogram(samples, Binning.LOGARITHMIC, 20)

        fractional = histogram.bin_edges - np.floor(histogram.bin_edges)
        np.testing.assert_allclose(fractional, 0.5)
        assert histogram.total == 2000

    def test_deterministic(self):
        samples = np.random.default_rng(9).exponential(size=300)

        first = build_histogram(samples)
        second = build_histogram(samples)

        np.testing.assert_array_equal(first.bin_edges, second.bin_edges)
        np.testing.assert_array_equal(first.counts, second.counts)

    def test_empty(self):
        with pytest.raises(EmptySamplesError):
            build_histogram([])

    def test_too_few_bins(self):
        with pytest.raises(ValueError):
            build_histogram([1, 2, 3], n_bins=1)

    def test_log_bins_need_positive_samples(self):
        with pytest.raises(ValueError):
            build_histogram([0.0, 1.0, 2.0], Binning.LOGARITHMIC)


class TestPowerLawFit:
    def test_recovers_exponent(self):
        histogram = build_histogram(power_law_samples(100_000), Binning.LOGARITHMIC)

        fit = powerlaw_fit(histogram)

        assert fit.exponent == pytest.approx(-1.5, abs=0.1)
        assert fit.r_squared > 0.99

    def test_flat_histogram(self):
        samples = np.random.default_rng(4).uniform(1.0, 100.0, 100_000)

        fit = powerlaw_fit(build_histogram(samples, Binning.LINEAR))

        assert fit.exponent == pytest.approx(0.0, abs=0.1)

    def test_fit_range_selects_bins(self):
        histogram = build_histogram(power_law_samples(50_000, seed=2))

        full = powerlaw_fit(histogram)
        middle = powerlaw_fit(histogram, fit_range=(3.0, 30.0))

        assert middle.bins_used < full.bins_used
        assert middle.fit_range == (3.0, 30.0)
        assert middle.exponent == pytest.approx(-1.5, abs=0.15)

    def test_single_bin(self):
        with pytest.raises(TooFewBinsError):
            powerlaw_fit(build_histogram([1, 1, 1, 1]))


class TestTailComparison:
    def test_thinner_tail_detected(self):
        rng = np.random.default_rng(0)
        data = rng.exponential(1.0, 5000)
        baseline = rng.exponential(2.0, 5000)

        result = tail_comparison(data, baseline)

        assert result["thinner"]
        assert result["data_tail_mass"] < result["baseline_tail_mass"]
        assert result["baseline_tail_mass"] == pytest.approx(0.05, abs=0.005)

    def test_same_distribution_is_not_thinner(self):
        samples = np.random.default_rng(3).exponential(1.0, 5000)

        result = tail_comparison(samples, samples)

        assert not result["thinner"]

    def test_empty(self):
        with pytest.raises(EmptySamplesError):
            tail_comparison([], [1.0])
