#!/usr/bin/env python3
"""Check every published numeric claim against exact computation and print a pass/fail table."""

import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Tuple

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from rich.console import Console
from rich.table import Table

from cli.output import setup_logging
from core.approx import chained_approx
from core.exact_core import binom_tail, brute_force_tail, outcome_form, render_decimal
from core.median_mode import central_summary, integer_mean_tails
from core.models import DiceSpace, PepysFamily, SimConfig
from core.newton_argument import (
    decompose_argument,
    james_win_by_convolution,
    monte_carlo_decomposition,
)
from core.ordering import crossover_probability, is_strictly_decreasing, pepys_sequence

logger = logging.getLogger(__name__)
console = Console()

FAIR = Fraction(1, 6)
SEED = 20061693


def golden_fractions() -> bool:
    expected = [
        (6, 1, "31031/46656"),
        (12, 2, "1346704211/2176782336"),
        (18, 3, "60666401980916/101559956668416"),
    ]
    return all(outcome_form(binom_tail(n, k, FAIR), n, FAIR) == s for n, k, s in expected)


def golden_decimals() -> bool:
    rendered = [render_decimal(binom_tail(n, n // 6, FAIR), 3) for n in (6, 12, 18)]
    return rendered == ["0.665", "0.619", "0.597"]


def weighted_reversal() -> bool:
    a, b = binom_tail(6, 1, Fraction(1, 4)), binom_tail(12, 2, Fraction(1, 4))
    return render_decimal(a, 4) == "0.8220" and render_decimal(b, 4) == "0.8416" and b > a


def chained_two_places() -> bool:
    return all(
        render_decimal(chained_approx(n), 2) == render_decimal(binom_tail(n, n // 6, FAIR), 2) == s
        for n, s in ((6, "0.67"), (12, "0.62"), (18, "0.60"))
    )


def argument_shares() -> bool:
    d = decompose_argument(FAIR)
    return (
        d.peter_multi_share == Fraction(12281, 31031)
        and d.james_lopsided_share == Fraction(383781250, 1346704211)
        and james_win_by_convolution(FAIR) == d.james_win
        and render_decimal(d.peter_multi_share, 2) == "0.40"
        and render_decimal(d.james_lopsided_share, 2) == "0.28"
    )


def coincidence_sweep() -> bool:
    for p in (Fraction(1, 6), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
        for n in range(1, 201):
            if (n * p).denominator != 1:
                continue
            summary = central_summary(n, p)
            if not (summary.mean == summary.median and summary.median in summary.modes):
                return False
            integer_mean_tails(n, p)
    return True


def mean_median_bound() -> bool:
    return all(
        central_summary(n, Fraction(i, 12)).mean_median_gap < Fraction(7, 10)
        for i in range(1, 12)
        for n in range(1, 201)
    )


def monotone_to_twenty() -> bool:
    return is_strictly_decreasing(pepys_sequence(PepysFamily(6, 20, FAIR)))


def crossover_oracle() -> bool:
    def h(p: float) -> float:
        return (1 - p) ** 5 * (1 + 11 * p) - 1

    low, high = 0.1, 0.5
    for _ in range(200):
        middle = (low + high) / 2
        low, high = (middle, high) if h(middle) > 0 else (low, middle)
    result = crossover_probability(1, 2, 6, tol=Fraction(1, 10**9))
    return abs(result.midpoint - (low + high) / 2) < 1e-9


def enumeration_equivalence() -> bool:
    for n in range(1, 9):
        for faces in range(2, 7):
            for success_faces in range(1, faces):
                space = DiceSpace(n, faces, success_faces)
                p = space.success_probability
                if any(brute_force_tail(space, k) != binom_tail(n, k, p) for k in range(n + 2)):
                    return False
    return True


def monte_carlo_sanity() -> bool:
    cfg = SimConfig(trials=10**6, seed=SEED)
    report = monte_carlo_decomposition(FAIR, cfg)
    z_scores = report.z_scores(decompose_argument(FAIR))
    return all(abs(z) < 4 for z in z_scores.values()) and report == monte_carlo_decomposition(
        FAIR, cfg
    )


CLAIMS: List[Tuple[str, Callable[[], bool]]] = [
    ("Golden fractions for A, B, C", golden_fractions),
    ("Golden decimals 0.665 / 0.619 / 0.597", golden_decimals),
    ("Weighted dice: 0.8220 < 0.8416", weighted_reversal),
    ("Chained approximation agrees to two places", chained_two_places),
    ("Argument shares 0.40 and 0.28", argument_shares),
    ("Mean, median and mode coincide at integer means", coincidence_sweep),
    ("Mean-median gap below 7/10", mean_median_bound),
    ("Sequence decreasing to k = 20", monotone_to_twenty),
    ("Crossover matches polynomial root", crossover_oracle),
    ("Enumeration equals closed form", enumeration_equivalence),
    ("Monte Carlo within 4 standard errors", monte_carlo_sanity),
]


def main() -> int:
    setup_logging(0)
    table = Table(title="Claims", show_header=True, header_style="bold magenta")
    table.add_column("#", justify="right")
    table.add_column("Claim")
    table.add_column("Result")

    failures = 0
    for index, (name, check) in enumerate(CLAIMS, start=1):
        with console.status(f"Checking {name}..."):
            try:
                passed = check()
            except Exception as e:
                logger.error(f"{name} raised {e!r}")
                passed = False
        failures += not passed
        table.add_row(str(index), name, "[green]pass[/green]" if passed else "[red]FAIL[/red]")

    console.print(table)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
