"""Mean, median and mode of a binomial distribution, computed exactly.

When n·p is an integer the three coincide; in general the mean and median
stay within ln 2 of each other.  Both facts are checked on every summary.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple

from core.exact_core import as_probability, binom_cdf, binom_pmf, binom_tail, binomial_weights
from core.models import ExactRational, Probability
from utils.exceptions import InvariantViolationError, PreconditionError

logger = logging.getLogger(__name__)

# Rational stand-in for ln 2 ~ 0.6931 that exact comparisons can use.
HAMZA_RATIONAL_BOUND = Fraction(7, 10)


@dataclass(frozen=True)
class CentralSummary:
    n: int
    p: Probability
    mean: ExactRational
    median: int
    modes: List[int]
    mean_median_gap: ExactRational

    @property
    def within_rational_bound(self) -> bool:
        return self.mean_median_gap < HAMZA_RATIONAL_BOUND

    @property
    def within_ln2(self) -> bool:
        return float(self.mean_median_gap) < math.log(2)

    @property
    def coincident(self) -> bool:
        return self.mean == self.median and self.median in self.modes

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "p": str(self.p),
            "mean": str(self.mean),
            "median": self.median,
            "modes": list(self.modes),
            "mean_median_gap": str(self.mean_median_gap),
            "gap_below_7_10": self.within_rational_bound,
            "gap_below_ln2": self.within_ln2,
        }


class IntegerMeanTails(NamedTuple):
    upper: Probability
    lower: Probability


def binom_mean(n: int, p: Any) -> ExactRational:
    """Exact mean n·p."""
    return n * Fraction(as_probability(p))


def binom_median(n: int, p: Any) -> int:
    """Smallest m with P(X <= m) >= 1/2."""
    weights, denominator = binomial_weights(n, p)
    cumulative = 0
    for m, w in enumerate(weights):
        cumulative += w
        if 2 * cumulative >= denominator:
            return m
    return n


def binom_modes(n: int, p: Any) -> List[int]:
    """Every k that maximizes P(X = k); two consecutive values on an exact tie."""
    weights, _ = binomial_weights(n, p)
    peak = max(weights)
    return [k for k, w in enumerate(weights) if w == peak]


def central_summary(n: int, p: Any) -> CentralSummary:
    p = as_probability(p)
    mean = binom_mean(n, p)
    median = binom_median(n, p)
    summary = CentralSummary(
        n=n,
        p=p,
        mean=mean,
        median=median,
        modes=binom_modes(n, p),
        mean_median_gap=abs(mean - median),
    )
    if not (summary.within_rational_bound and summary.within_ln2):
        raise InvariantViolationError(
            f"Mean-median gap {summary.mean_median_gap} for n={n}, p={p} "
            f"is not below ln 2"
        )
    logger.debug("Central summary n=%d p=%s: %s", n, p, summary.to_dict())
    return summary


def integer_mean_tails(n: int, p: Any) -> IntegerMeanTails:
    """P(X >= np) and P(X <= np) when np is an integer; both are at least 1/2."""
    p = as_probability(p)
    mean = binom_mean(n, p)
    if mean.denominator != 1:
        raise PreconditionError(f"n*p = {mean} is not an integer for n={n}, p={p}")
    np_ = int(mean)
    upper = binom_tail(n, np_, p)
    lower = binom_cdf(n, np_, p)
    half = Fraction(1, 2)
    if upper < half or lower < half:
        raise InvariantViolationError(
            f"Tails at the integer mean fall below 1/2 for n={n}, p={p}: "
            f"upper={upper}, lower={lower}"
        )
    if upper + lower != 1 + binom_pmf(n, np_, p):
        raise InvariantViolationError(
            f"Tails at the integer mean do not overlap in P(X = np) for n={n}, p={p}"
        )
    return IntegerMeanTails(upper=upper, lower=lower)
