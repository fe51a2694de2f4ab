"""Exact computations for the Newton-Pepys dice problem."""

from core.approx import (
    ApproxReport,
    approx_report,
    chained_approx,
    demoivre_modal_approx,
    modal_sequence,
    modal_tail_approx,
)
from core.exact_core import (
    as_probability,
    binom_cdf,
    binom_coeff,
    binom_pmf,
    binom_tail,
    brute_force_tail,
    outcome_form,
    parse_rational,
    render_decimal,
    success_count_histogram,
    wager_exact,
    wager_tail,
)
from core.median_mode import (
    CentralSummary,
    binom_mean,
    binom_median,
    binom_modes,
    central_summary,
    integer_mean_tails,
)
from core.models import (
    DiceSpace,
    ExactRational,
    PepysFamily,
    Probability,
    SimConfig,
    ThrowSequence,
    Wager,
    WagerMode,
)
from core.newton_argument import (
    ArgumentDecomposition,
    SequenceScore,
    SimReport,
    decompose_argument,
    dominance_counterexample,
    dominance_violations,
    equal_luck_scenario,
    james_win_by_convolution,
    monte_carlo_decomposition,
    score_sequence,
    win_rates,
)
from core.ordering import (
    CrossoverResult,
    OrderingRow,
    crossover_probability,
    is_strictly_decreasing,
    most_likely,
    ordering_table,
    pepys_sequence,
)
from core.parallel import ParallelProcessor

__all__ = [
    # Exact binomial core
    "as_probability",
    "binom_cdf",
    "binom_coeff",
    "binom_pmf",
    "binom_tail",
    "brute_force_tail",
    "outcome_form",
    "parse_rational",
    "render_decimal",
    "success_count_histogram",
    "wager_exact",
    "wager_tail",

    # Central tendency
    "CentralSummary",
    "binom_mean",
    "binom_median",
    "binom_modes",
    "central_summary",
    "integer_mean_tails",

    # Approximations
    "ApproxReport",
    "approx_report",
    "chained_approx",
    "demoivre_modal_approx",
    "modal_sequence",
    "modal_tail_approx",

    # Ordering
    "CrossoverResult",
    "OrderingRow",
    "crossover_probability",
    "is_strictly_decreasing",
    "most_likely",
    "ordering_table",
    "pepys_sequence",

    # Peter and James
    "ArgumentDecomposition",
    "SequenceScore",
    "SimReport",
    "decompose_argument",
    "dominance_counterexample",
    "dominance_violations",
    "equal_luck_scenario",
    "james_win_by_convolution",
    "monte_carlo_decomposition",
    "score_sequence",
    "win_rates",

    # Models
    "DiceSpace",
    "ExactRational",
    "PepysFamily",
    "Probability",
    "SimConfig",
    "ThrowSequence",
    "Wager",
    "WagerMode",

    # Execution
    "ParallelProcessor",
]
