"""Tests for exact binomial probabilities and the enumeration oracle."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exact_core import (
    as_probability,
    binom_cdf,
    binom_coeff,
    binom_pmf,
    binom_tail,
    brute_force_tail,
    outcome_form,
    parse_rational,
    pmf_row,
    render_decimal,
    success_count_histogram,
    wager_exact,
    wager_tail,
)
from core.models import DiceSpace, Probability, Wager
from utils.exceptions import DomainError, EnumerationCapError, InvalidProbabilityError

FAIR_DIE = Probability(1, 6)

# Newton's three propositions at p = 1/6, as (dice, threshold, exact tail).
GOLDEN_TAILS = [
    (6, 1, Fraction(31031, 46656)),
    (12, 2, Fraction(1346704211, 2176782336)),
    (18, 3, Fraction(60666401980916, 101559956668416)),
]

probabilities = st.builds(
    Fraction, st.integers(min_value=0, max_value=12), st.just(12)
)
rational_probabilities = st.fractions(min_value=0, max_value=1, max_denominator=50)


class TestProbability:
    """Test cases for the Probability value type."""

    def test_parses_common_forms(self):
        assert Probability("1/6") == Fraction(1, 6)
        assert Probability(" 2/12 ") == Fraction(1, 6)
        assert Probability("0.25") == Fraction(1, 4)
        assert Probability(1) == 1
        assert str(Probability(2, 12)) == "1/6"

    @pytest.mark.parametrize("value", ["-1/6", "7/6", "abc", "1/0", ""])
    def test_rejects_invalid(self, value):
        with pytest.raises(InvalidProbabilityError):
            Probability(value)

    def test_invalid_probability_is_a_value_error(self):
        with pytest.raises(ValueError):
            Probability("3/2")

    def test_as_probability_rejects_floats(self):
        with pytest.raises(InvalidProbabilityError):
            as_probability(1 / 6)

    def test_parse_rational(self):
        assert parse_rational("1e-9") == Fraction(1, 10**9)
        assert parse_rational("4/8") == Fraction(1, 2)
        with pytest.raises(DomainError):
            parse_rational("one half")


class TestBinomialCoefficients:
    def test_values(self):
        assert binom_coeff(6, 0) == 1
        assert binom_coeff(12, 2) == 66
        assert binom_coeff(18, 3) == 816
        assert binom_coeff(3, 5) == 0

    def test_negative_arguments(self):
        with pytest.raises(DomainError):
            binom_coeff(-1, 0)

    def test_large_values_are_exact(self):
        assert binom_coeff(1000, 500) == math.comb(1000, 500)


class TestGoldenValues:
    """Newton's exact values for the three propositions."""

    @pytest.mark.parametrize("n,k,expected", GOLDEN_TAILS)
    def test_tail_fractions(self, n, k, expected):
        assert binom_tail(n, k, FAIR_DIE) == expected

    def test_fraction_strings(self):
        assert str(binom_tail(6, 1, FAIR_DIE)) == "31031/46656"
        assert str(binom_tail(12, 2, FAIR_DIE)) == "1346704211/2176782336"
        # Lowest terms of 60666401980916/101559956668416.
        assert str(binom_tail(18, 3, FAIR_DIE)) == "15166600495229/25389989167104"

    def test_outcome_form_matches_historical_strings(self):
        assert outcome_form(binom_tail(6, 1, FAIR_DIE), 6, FAIR_DIE) == "31031/46656"
        assert outcome_form(binom_tail(12, 2, FAIR_DIE), 12, FAIR_DIE) == "1346704211/2176782336"
        assert (
            outcome_form(binom_tail(18, 3, FAIR_DIE), 18, FAIR_DIE)
            == "60666401980916/101559956668416"
        )

    def test_outcome_form_rejects_fractional_counts(self):
        with pytest.raises(DomainError):
            outcome_form(Fraction(1, 7), 2, FAIR_DIE)

    @pytest.mark.parametrize(
        "n,k,expected", [(6, 1, "0.665"), (12, 2, "0.619"), (18, 3, "0.597")]
    )
    def test_decimals(self, n, k, expected):
        assert render_decimal(binom_tail(n, k, FAIR_DIE), 3) == expected

    def test_modal_pmf(self):
        assert binom_pmf(6, 1, FAIR_DIE) == Fraction(3125, 7776)

    def test_wager_helpers(self):
        wager = Wager(num_dice=12, threshold=2, success_prob="1/6")
        assert isinstance(wager.success_prob, Probability)
        assert wager_tail(wager) == Fraction(1346704211, 2176782336)
        assert wager_exact(wager) == binom_pmf(12, 2, FAIR_DIE)


class TestBoundaries:
    def test_tail_edges(self):
        assert binom_tail(1, 0, FAIR_DIE) == 1
        assert binom_tail(5, -2, FAIR_DIE) == 1
        assert binom_tail(5, 6, FAIR_DIE) == 0

    def test_cdf_edges(self):
        assert binom_cdf(5, -1, FAIR_DIE) == 0
        assert binom_cdf(5, 5, FAIR_DIE) == 1
        assert binom_cdf(5, 9, FAIR_DIE) == 1

    def test_pmf_outside_support(self):
        assert binom_pmf(4, 5, FAIR_DIE) == 0
        assert binom_pmf(4, -1, FAIR_DIE) == 0

    def test_degenerate_probabilities(self):
        assert binom_tail(6, 1, 0) == 0
        assert binom_tail(6, 6, 1) == 1
        assert binom_pmf(6, 0, 0) == 1

    def test_zero_dice_rejected(self):
        with pytest.raises(DomainError):
            binom_tail(0, 0, FAIR_DIE)

    def test_results_are_probabilities(self):
        assert isinstance(binom_tail(6, 1, FAIR_DIE), Probability)
        assert isinstance(binom_cdf(6, 1, FAIR_DIE), Probability)
        assert isinstance(binom_pmf(6, 1, FAIR_DIE), Probability)


class TestDistributionProperties:
    @given(n=st.integers(min_value=1, max_value=100), p=probabilities)
    @settings(max_examples=60, deadline=None)
    def test_pmf_sums_to_one(self, n, p):
        assert sum(pmf_row(n, p)) == 1

    @given(n=st.integers(min_value=1, max_value=100), p=rational_probabilities)
    @settings(max_examples=60, deadline=None)
    def test_pmf_sums_to_one_for_arbitrary_rationals(self, n, p):
        assert sum(pmf_row(n, p)) == 1

    @given(
        n=st.integers(min_value=1, max_value=100),
        k=st.integers(min_value=-2, max_value=102),
        p=probabilities,
    )
    @settings(max_examples=100, deadline=None)
    def test_tail_and_cdf_partition(self, n, k, p):
        assert binom_tail(n, k + 1, p) + binom_cdf(n, k, p) == 1

    @given(n=st.integers(min_value=1, max_value=40), p=probabilities)
    @settings(max_examples=60, deadline=None)
    def test_tail_is_non_increasing_in_threshold(self, n, p):
        tails = [binom_tail(n, k, p) for k in range(n + 2)]
        assert all(a >= b for a, b in zip(tails, tails[1:]))

    @pytest.mark.parametrize(
        "n, k", [(6, 1), (12, 2), (18, 3), (1, 1), (10, 0), (10, 10), (30, 7), (100, 50)]
    )
    def test_tail_non_decreasing_in_probability(self, n, k):
        tails = [binom_tail(n, k, Fraction(i, 24)) for i in range(25)]
        assert all(a <= b for a, b in zip(tails, tails[1:]))
        if 1 <= k <= n:
            assert all(a < b for a, b in zip(tails, tails[1:]))

    @given(
        n=st.integers(min_value=1, max_value=100),
        k=st.integers(min_value=0, max_value=100),
        p=rational_probabilities,
        q=rational_probabilities,
    )
    @settings(max_examples=100, deadline=None)
    def test_tail_monotone_for_any_pair_of_probabilities(self, n, k, p, q):
        low, high = sorted((p, q))
        assert binom_tail(n, k, low) <= binom_tail(n, k, high)


class TestRenderDecimal:
    def test_fixed_digits(self):
        assert render_decimal(Fraction(1, 2), 3) == "0.500"
        assert render_decimal(1, 2) == "1.00"
        assert render_decimal(Fraction(-1, 3), 4) == "-0.3333"

    def test_round_half_even(self):
        assert render_decimal(Fraction(1, 8), 2) == "0.12"
        assert render_decimal(Fraction(3, 8), 2) == "0.38"
        assert render_decimal(Fraction(5, 1000), 2) == "0.00"
        assert render_decimal(Fraction(15, 1000), 2) == "0.02"

    def test_rejects_zero_digits(self):
        with pytest.raises(DomainError):
            render_decimal(Fraction(1, 2), 0)

    @given(
        num=st.integers(min_value=0, max_value=10**12),
        den=st.integers(min_value=1, max_value=10**12),
        digits=st.integers(min_value=1, max_value=12),
    )
    @settings(max_examples=200)
    def test_error_bounded_by_half_unit(self, num, den, digits):
        value = Fraction(num, den)
        rendered = Fraction(render_decimal(value, digits))
        assert abs(rendered - value) <= Fraction(1, 2 * 10**digits)


class TestEnumerationOracle:
    """Brute-force enumeration must reproduce the closed form exactly."""

    def test_newton_case_a_by_enumeration(self):
        assert brute_force_tail(DiceSpace(6), 1) == Fraction(31031, 46656)

    def test_histogram_counts_every_outcome(self):
        space = DiceSpace(num_dice=4, faces=6, success_faces=1)
        histogram = success_count_histogram(space)
        assert sum(histogram) == 6**4
        assert histogram == (625, 500, 150, 20, 1)

    @pytest.mark.slow
    def test_enumeration_equivalence_sweep(self):
        for n in range(1, 9):
            for faces in range(2, 7):
                for success_faces in range(1, faces):
                    space = DiceSpace(n, faces, success_faces)
                    p = space.success_probability
                    for k in range(n + 2):
                        assert brute_force_tail(space, k) == binom_tail(n, k, p), (
                            n,
                            faces,
                            success_faces,
                            k,
                        )

    def test_cap_is_enforced(self):
        space = DiceSpace(num_dice=9)
        with pytest.raises(EnumerationCapError) as exc_info:
            brute_force_tail(space, 1, cap=1000)
        assert exc_info.value.outcome_count == 6**9
        assert exc_info.value.cap == 1000

    def test_histogram_refuses_spaces_over_the_default_cap(self):
        with pytest.raises(EnumerationCapError) as exc_info:
            success_count_histogram(DiceSpace(num_dice=20))
        assert exc_info.value.outcome_count == 6**20

    def test_invalid_spaces(self):
        with pytest.raises(DomainError):
            DiceSpace(num_dice=0)
        with pytest.raises(DomainError):
            DiceSpace(num_dice=2, faces=1)
        with pytest.raises(DomainError):
            DiceSpace(num_dice=2, faces=6, success_faces=7)
