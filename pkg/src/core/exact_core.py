"""Exact binomial probabilities over rational success probabilities.

Every probability is computed as a single integer numerator over the common
denominator ``b**n`` (for ``p = a/b``) and reduced once, so no intermediate
value is ever rounded.  A brute-force sweep over complete dice outcome spaces
serves as an independent oracle for the closed-form tails.
"""

import itertools
import logging
import math
import threading
from collections import Counter
from fractions import Fraction
from typing import Any, List, Tuple

from cachetools import LRUCache, cached

from core.models import DiceSpace, ExactRational, Probability, Wager
from utils.exceptions import DomainError, EnumerationCapError, InvalidProbabilityError

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 10**7

_row_cache: LRUCache = LRUCache(maxsize=4096)
_row_lock = threading.Lock()
_histogram_cache: LRUCache = LRUCache(maxsize=256)
_histogram_lock = threading.Lock()


def parse_rational(text: Any) -> ExactRational:
    """Parse ``"a/b"``, an integer, or a decimal literal into an exact rational."""
    try:
        return Fraction(text.strip() if isinstance(text, str) else text)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise DomainError(f"Not a rational number: {text!r}") from e


def as_probability(value: Any) -> Probability:
    """Coerce ``value`` to a validated Probability."""
    if isinstance(value, Probability):
        return value
    if isinstance(value, float):
        raise InvalidProbabilityError(
            f"Pass probabilities as exact rationals, not floats: {value!r}"
        )
    return Probability(value)


def _require_trials(n: int) -> None:
    if n < 1:
        raise DomainError(f"Number of dice must be at least 1, got {n}")


def binom_coeff(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binom_coeff needs non-negative arguments, got ({n}, {k})")
    return math.comb(n, k)


@cached(_row_cache, lock=_row_lock)
def _weight_row(n: int, p: Fraction) -> Tuple[Tuple[int, ...], int]:
    """Integer weights C(n,j)·a^j·(b−a)^(n−j) for j = 0..n, and the common denominator b^n."""
    a, b = p.numerator, p.denominator
    q = b - a
    weights = tuple(math.comb(n, j) * a**j * q ** (n - j) for j in range(n + 1))
    logger.debug("Built binomial weight row n=%d p=%s", n, p)
    return weights, b**n


def binomial_weights(n: int, p: Any) -> Tuple[Tuple[int, ...], int]:
    """Expose the cached integer weight row for callers that scan a whole distribution."""
    _require_trials(n)
    return _weight_row(n, Fraction(as_probability(p)))


def binom_pmf(n: int, k: int, p: Any) -> Probability:
    """Exact P(X = k) for X ~ Binomial(n, p)."""
    _require_trials(n)
    p = as_probability(p)
    if k < 0 or k > n:
        return Probability(0)
    weights, denominator = _weight_row(n, Fraction(p))
    return Probability(weights[k], denominator)


def binom_tail(n: int, k: int, p: Any) -> Probability:
    """Exact P(X >= k) for X ~ Binomial(n, p); 1 for k <= 0 and 0 for k > n."""
    _require_trials(n)
    p = as_probability(p)
    if k <= 0:
        return Probability(1)
    if k > n:
        return Probability(0)
    weights, denominator = _weight_row(n, Fraction(p))
    return Probability(sum(weights[k:]), denominator)


def binom_cdf(n: int, k: int, p: Any) -> Probability:
    """Exact P(X <= k) for X ~ Binomial(n, p); 0 for k < 0 and 1 for k >= n."""
    _require_trials(n)
    p = as_probability(p)
    if k < 0:
        return Probability(0)
    if k >= n:
        return Probability(1)
    weights, denominator = _weight_row(n, Fraction(p))
    return Probability(sum(weights[: k + 1]), denominator)


def wager_tail(wager: Wager) -> Probability:
    """Chance that a wager succeeds: at least ``threshold`` successes."""
    return binom_tail(wager.num_dice, wager.threshold, wager.success_prob)


def wager_exact(wager: Wager) -> Probability:
    """Chance of exactly ``threshold`` successes, the reading a per-throw argument needs."""
    return binom_pmf(wager.num_dice, wager.threshold, wager.success_prob)


def render_decimal(x: Any, digits: int) -> str:
    """Render an exact rational with exactly ``digits`` fractional digits.

    Rounds half to even on the exact value; floats are converted exactly
    (their binary value) before rounding.
    """
    if digits < 1:
        raise DomainError(f"digits must be at least 1, got {digits}")
    value = Fraction(x)
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


@cached(_histogram_cache, lock=_histogram_lock)
def _enumerate_histogram(space: DiceSpace) -> Tuple[int, ...]:
    # Faces 0..success_faces-1 are the successes.
    indicator = [1 if face < space.success_faces else 0 for face in range(space.faces)]
    counts = Counter(map(sum, itertools.product(indicator, repeat=space.num_dice)))
    logger.debug(
        "Enumerated %d outcomes of %d dice with %d faces",
        space.outcome_count,
        space.num_dice,
        space.faces,
    )
    return tuple(counts.get(j, 0) for j in range(space.num_dice + 1))


def success_count_histogram(
    space: DiceSpace, cap: int = DEFAULT_ENUMERATION_CAP
) -> Tuple[int, ...]:
    """Number of outcomes with j successes, j = 0..num_dice, by visiting every outcome."""
    outcomes = space.outcome_count
    if outcomes > cap:
        raise EnumerationCapError(
            f"Enumerating {space.faces}^{space.num_dice} = {outcomes} outcomes "
            f"exceeds the cap of {cap}",
            outcome_count=outcomes,
            cap=cap,
        )
    return _enumerate_histogram(space)


def brute_force_tail(
    space: DiceSpace, threshold: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Probability:
    """P(at least ``threshold`` successes) by full enumeration of ``space``."""
    if threshold < 0:
        raise DomainError(f"threshold must be non-negative, got {threshold}")
    histogram = success_count_histogram(space, cap=cap)
    return Probability(sum(histogram[threshold:]), space.outcome_count)


def pmf_row(n: int, p: Any) -> List[Probability]:
    """The full distribution [P(X = 0), ..., P(X = n)]."""
    weights, denominator = binomial_weights(n, p)
    return [Probability(w, denominator) for w in weights]


def outcome_form(value: Any, n: int, p: Any) -> str:
    """Write ``value`` as favourable outcomes over the b**n equally likely ones, for p = a/b.

    ``binom_tail(18, 3, 1/6)`` reduces to 15166600495229/25389989167104; its
    outcome form is 60666401980916/101559956668416.
    """
    _require_trials(n)
    total = Fraction(as_probability(p)).denominator ** n
    favourable = Fraction(value) * total
    if favourable.denominator != 1:
        raise DomainError(f"{value} is not a whole number of outcomes out of {total}")
    return f"{favourable.numerator}/{total}"
