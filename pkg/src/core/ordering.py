"""The generalized Pepys sequence, its monotonicity, and where the A/B ordering reverses.

The sequence is P(X >= k) for X ~ Binomial(r·k, p), k = 1..k_max.  For fair
dice (r = 6, p = 1/6) it decreases; for heavier success probabilities the
first two terms swap.  The crossover search brackets the swap point with
signs evaluated in exact rational arithmetic, so the returned bracket is
certified rather than floating-point approximate.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from core.exact_core import as_probability, binom_pmf, binom_tail, parse_rational
from core.models import ExactRational, PepysFamily, Probability, WagerMode
from core.parallel import ParallelProcessor
from utils.exceptions import DomainError, NoSignChangeError, PreconditionError

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = Fraction(1, 10**9)
SCAN_GRID_DENOMINATOR = 64
# The fair-die A/B pair has a known bracket: A leads at 1/6, B leads at 1/4.
KNOWN_BRACKETS = {(1, 2, 6): (Fraction(1, 6), Fraction(1, 4))}


@dataclass(frozen=True)
class CrossoverResult:
    k_pair: Tuple[int, int]
    dice_per_unit: int
    bracket: Tuple[ExactRational, ExactRational]
    iterations: int

    @property
    def midpoint(self) -> float:
        low, high = self.bracket
        return float((low + high) / 2)

    @property
    def width(self) -> ExactRational:
        return self.bracket[1] - self.bracket[0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k1": self.k_pair[0],
            "k2": self.k_pair[1],
            "dice_per_unit": self.dice_per_unit,
            "p_low": str(self.bracket[0]),
            "p_high": str(self.bracket[1]),
            "midpoint": self.midpoint,
            "iterations": self.iterations,
        }


@dataclass(frozen=True)
class OrderingRow:
    p: Probability
    tails: Tuple[Probability, ...]
    ranking: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": str(self.p),
            "tails": [str(t) for t in self.tails],
            "ranking": list(self.ranking),
        }


def _term(family: PepysFamily, k: int) -> Probability:
    n = family.dice_per_unit * k
    if family.mode is WagerMode.EXACTLY:
        return binom_pmf(n, k, family.success_prob)
    return binom_tail(n, k, family.success_prob)


def pepys_sequence(family: PepysFamily) -> List[Probability]:
    """[P(X >= k | N = r·k, p)] for k = 1..k_max (or P(X = k) in exactly mode)."""
    sequence = [_term(family, k) for k in range(1, family.k_max + 1)]
    logger.debug(
        "Pepys sequence r=%d k_max=%d p=%s mode=%s",
        family.dice_per_unit,
        family.k_max,
        family.success_prob,
        family.mode.value,
    )
    return sequence


def is_strictly_decreasing(seq: Sequence[Any]) -> bool:
    if len(seq) < 2:
        raise PreconditionError(
            f"A monotonicity verdict needs at least two terms, got {len(seq)}"
        )
    return all(a > b for a, b in zip(seq, seq[1:]))


def ranking(values: Sequence[Any]) -> Tuple[int, ...]:
    """1-based indices ordered from the largest value down; ties keep the smaller index first."""
    return tuple(i + 1 for i in sorted(range(len(values)), key=lambda i: -values[i]))


def most_likely(family: PepysFamily) -> int:
    """The k whose proposition is likeliest (smallest k on ties)."""
    return ranking(pepys_sequence(family))[0]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def tail_difference(k1: int, k2: int, dice_per_unit: int, p: Any) -> ExactRational:
    """g(p) = P(X >= k1 | N = r·k1) - P(X >= k2 | N = r·k2), exactly."""
    return binom_tail(dice_per_unit * k1, k1, p) - binom_tail(dice_per_unit * k2, k2, p)


def find_bracket(k1: int, k2: int, dice_per_unit: int) -> Tuple[Fraction, Fraction]:
    """First adjacent pair of grid points i/64 across which g changes sign."""
    known = KNOWN_BRACKETS.get((k1, k2, dice_per_unit))
    if known is not None:
        low, high = known
        if _sign(tail_difference(k1, k2, dice_per_unit, low)) * _sign(
            tail_difference(k1, k2, dice_per_unit, high)
        ) < 0:
            return known

    grid = [Fraction(i, SCAN_GRID_DENOMINATOR) for i in range(1, SCAN_GRID_DENOMINATOR)]
    previous_p, previous_sign = None, 0
    for p in grid:
        s = _sign(tail_difference(k1, k2, dice_per_unit, p))
        if s == 0:
            return p, p
        if previous_p is not None and s != previous_sign:
            return previous_p, p
        previous_p, previous_sign = p, s
    raise NoSignChangeError(
        f"No sign change of P(A_{k1}) - P(A_{k2}) with r={dice_per_unit} "
        f"on the grid i/{SCAN_GRID_DENOMINATOR}",
        grid_size=len(grid),
    )


def crossover_probability(
    k1: int,
    k2: int,
    r: int = 6,
    tol: Any = DEFAULT_TOLERANCE,
    bracket: Optional[Tuple[Any, Any]] = None,
) -> CrossoverResult:
    """Bisect g(p) to a certified bracket no wider than ``tol``."""
    if not 1 <= k1 < k2:
        raise PreconditionError(f"Need 1 <= k1 < k2, got k1={k1}, k2={k2}")
    if r < 1:
        raise DomainError(f"dice_per_unit must be at least 1, got {r}")
    tol = parse_rational(tol)
    if tol <= 0:
        raise DomainError(f"Tolerance must be positive, got {tol}")

    if bracket is None:
        low, high = find_bracket(k1, k2, r)
    else:
        low, high = (Fraction(as_probability(b)) for b in bracket)
        if low > high:
            low, high = high, low
    sign_low = _sign(tail_difference(k1, k2, r, low))
    sign_high = _sign(tail_difference(k1, k2, r, high))
    if sign_low * sign_high > 0:
        raise NoSignChangeError(f"g does not change sign on [{low}, {high}]")

    iterations = 0
    if sign_low == 0:
        high = low
    elif sign_high == 0:
        low = high
    while high - low > tol:
        middle = (low + high) / 2
        sign_middle = _sign(tail_difference(k1, k2, r, middle))
        iterations += 1
        if sign_middle == 0:
            low = high = middle
        elif sign_middle == sign_low:
            low = middle
        else:
            high = middle

    result = CrossoverResult(
        k_pair=(k1, k2), dice_per_unit=r, bracket=(low, high), iterations=iterations
    )
    logger.info(
        "Crossover for k=(%d, %d), r=%d bracketed at ~%.10f after %d bisections",
        k1,
        k2,
        r,
        result.midpoint,
        iterations,
    )
    return result


def ordering_table(
    family: PepysFamily,
    p_grid: Sequence[Any],
    processor: Optional[ParallelProcessor] = None,
    progress_callback: Optional[Callable[[int, int], None]] = None,
) -> List[OrderingRow]:
    """For each p, the exact tails and the ranking of k = 1..k_max."""
    if not p_grid:
        raise PreconditionError("ordering_table needs a nonempty probability grid")
    processor = processor or ParallelProcessor()
    grid = [as_probability(p) for p in p_grid]

    def evaluate(p: Probability) -> OrderingRow:
        tails = tuple(
            pepys_sequence(
                PepysFamily(family.dice_per_unit, family.k_max, p, family.mode)
            )
        )
        return OrderingRow(p=p, tails=tails, ranking=ranking(tails))

    return processor.process_items_parallel(
        grid, evaluate, progress_callback=progress_callback
    )
