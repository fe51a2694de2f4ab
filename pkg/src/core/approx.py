"""Floating-point approximations to the integer-mean tail, reported against exact values."""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from core.exact_core import as_probability, binom_pmf, binom_tail
from core.median_mode import binom_mean
from core.models import ExactRational, Probability
from utils.exceptions import DegenerateProbabilityError, PreconditionError

logger = logging.getLogger(__name__)

# Fixed literals, not fitted: the share of the modal probability above 1/2,
# and the modal coefficient sqrt(36 / (10*pi)) for fair dice, to two places.
MODAL_SHARE = 0.4
FAIR_DIE_MODAL_COEFFICIENT = 1.07
FAIR_DIE = Fraction(1, 6)


@dataclass(frozen=True)
class ApproxReport:
    n: int
    p: Probability
    exact: ExactRational
    modal_tail: float
    demoivre_modal: float
    # Fair dice only; None for any other p.
    chained: Optional[float]
    abs_errors: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "p": str(self.p),
            "exact": str(self.exact),
            "modal_tail": self.modal_tail,
            "demoivre_modal": self.demoivre_modal,
            "chained": self.chained,
            "abs_errors": dict(self.abs_errors),
        }


def _integer_mean(n: int, p: Probability) -> int:
    mean = binom_mean(n, p)
    if mean.denominator != 1:
        raise PreconditionError(f"n*p = {mean} is not an integer for n={n}, p={p}")
    return int(mean)


def modal_tail_approx(n: int, p: Any) -> float:
    """1/2 + 0.4·P(X = np): the tail exceeds 1/2 by a share of the modal probability."""
    p = as_probability(p)
    np_ = _integer_mean(n, p)
    return 0.5 + MODAL_SHARE * float(binom_pmf(n, np_, p))


def demoivre_modal_approx(n: int, p: Any) -> float:
    """Normal approximation 1/sqrt(2·pi·n·p·(1-p)) to the modal probability."""
    p = as_probability(p)
    if p == 0 or p == 1:
        raise DegenerateProbabilityError(
            f"The modal approximation needs 0 < p < 1, got {p}", probability=p
        )
    return 1.0 / math.sqrt(2 * math.pi * n * float(p * (1 - p)))


def chained_approx(n: int) -> float:
    """1/2 + 0.4·1.07/sqrt(n); meaningful for the fair-die family only."""
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    return 0.5 + MODAL_SHARE * FAIR_DIE_MODAL_COEFFICIENT / math.sqrt(n)


def approx_report(n: int, p: Any) -> ApproxReport:
    p = as_probability(p)
    np_ = _integer_mean(n, p)
    exact = binom_tail(n, np_, p)
    exact_float = float(exact)
    modal_tail = modal_tail_approx(n, p)
    demoivre = demoivre_modal_approx(n, p)
    abs_errors = {
        "modal_tail": abs(modal_tail - exact_float),
        # Compared against the modal probability it approximates, not the tail.
        "demoivre_modal": abs(demoivre - float(binom_pmf(n, np_, p))),
    }
    chained = None
    if p == FAIR_DIE:
        chained = chained_approx(n)
        abs_errors["chained"] = abs(chained - exact_float)
    report = ApproxReport(
        n=n,
        p=p,
        exact=exact,
        modal_tail=modal_tail,
        demoivre_modal=demoivre,
        chained=chained,
        abs_errors=abs_errors,
    )
    logger.debug("Approximation report n=%d p=%s errors=%s", n, p, report.abs_errors)
    return report


def modal_sequence(dice_per_unit: int, k_max: int, p: Any) -> List[Probability]:
    """Modal probabilities P(X = k) for N = dice_per_unit·k, k = 1..k_max."""
    p = as_probability(p)
    return [binom_pmf(dice_per_unit * k, k, p) for k in range(1, k_max + 1)]
