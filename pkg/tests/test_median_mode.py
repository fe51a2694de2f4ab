"""Tests for exact mean, median and mode."""

import math
from fractions import Fraction

import pytest

from core.median_mode import (
    HAMZA_RATIONAL_BOUND,
    binom_mean,
    binom_median,
    binom_modes,
    central_summary,
    integer_mean_tails,
)
from utils.exceptions import PreconditionError

COINCIDENCE_PROBABILITIES = [
    Fraction(1, 6),
    Fraction(1, 4),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(2, 3),
]


class TestCentralValues:
    def test_fair_die_propositions(self):
        for n, expected in [(6, 1), (12, 2), (18, 3)]:
            assert binom_mean(n, Fraction(1, 6)) == expected
            assert binom_median(n, Fraction(1, 6)) == expected
            assert binom_modes(n, Fraction(1, 6)) == [expected]

    def test_tied_modes(self):
        # (n + 1)p = 1 is an integer, so 0 and 1 share the peak.
        assert binom_modes(5, Fraction(1, 6)) == [0, 1]
        assert binom_modes(1, Fraction(1, 2)) == [0, 1]

    def test_median_of_symmetric_odd_case(self):
        # P(X <= 0) = 1/2 already reaches one half.
        assert binom_median(1, Fraction(1, 2)) == 0

    def test_non_integer_mean(self):
        summary = central_summary(7, Fraction(1, 6))
        assert summary.mean == Fraction(7, 6)
        assert summary.median == 1
        assert summary.mean_median_gap == Fraction(1, 6)
        assert not summary.coincident

    def test_summary_dict(self):
        data = central_summary(6, Fraction(1, 6)).to_dict()
        assert data["mean"] == "1"
        assert data["median"] == 1
        assert data["modes"] == [1]
        assert data["gap_below_7_10"] is True
        assert data["gap_below_ln2"] is True

    def test_rational_bound_sits_above_ln2(self):
        assert float(HAMZA_RATIONAL_BOUND) > math.log(2)


class TestIntegerMeanCoincidence:
    """When n*p is an integer, mean, median and mode agree and both tails reach 1/2."""

    def test_coincidence_sweep(self):
        checked = 0
        for p in COINCIDENCE_PROBABILITIES:
            for n in range(1, 201):
                if (n * p).denominator != 1:
                    continue
                summary = central_summary(n, p)
                assert summary.mean == summary.median, (n, p)
                assert summary.median in summary.modes, (n, p)
                tails = integer_mean_tails(n, p)
                assert tails.upper >= Fraction(1, 2), (n, p)
                assert tails.lower >= Fraction(1, 2), (n, p)
                checked += 1
        assert checked > 300

    def test_fair_die_tails(self):
        tails = integer_mean_tails(6, Fraction(1, 6))
        assert tails.upper == Fraction(31031, 46656)
        assert tails.lower == Fraction(15625 + 18750, 46656)

    def test_requires_integer_mean(self):
        with pytest.raises(PreconditionError):
            integer_mean_tails(7, Fraction(1, 6))


class TestMeanMedianGap:
    def test_bound_holds_on_grid(self):
        for i in range(1, 12):
            p = Fraction(i, 12)
            for n in range(1, 201):
                summary = central_summary(n, p)
                assert summary.mean_median_gap < Fraction(7, 10), (n, p)
                assert summary.within_ln2

    def test_single_die_gap(self):
        # P(X <= 0) = 7/12 already reaches one half.
        summary = central_summary(1, Fraction(5, 12))
        assert summary.median == 0
        assert summary.mean_median_gap == Fraction(5, 12)
