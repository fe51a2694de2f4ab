"""Peter and James: the per-throw dominance argument, taken apart exactly.

Peter wins a throw of six dice with at least one success.  James wins a pair
of throws (twelve dice) with at least two successes between them.  The
argument that Peter must fare at least as well on every sequence of throws is
false: a lopsided pair such as ``[2, 0]`` pays James once while Peter wins
only half his throws.  The aggregate ordering still favours Peter for fair
dice, but that depends on the probability measure, which the argument never
uses; at p = 1/4 the same narrative holds and the ordering is reversed.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from core.exact_core import as_probability, binom_pmf, binom_tail, pmf_row
from core.models import DICE_PER_THROW, ExactRational, Probability, SimConfig, ThrowSequence
from core.parallel import ParallelProcessor
from utils.exceptions import (
    DegenerateProbabilityError,
    PreconditionError,
    UnknownGeneratorError,
)

logger = logging.getLogger(__name__)

# Trials are cut into fixed chunks, each with its own spawned seed, so the
# merged counts do not depend on how many workers process the chunks.
CHUNK_TRIALS = 1 << 16
MAX_DOMINANCE_SEARCH_LENGTH = 6

BIT_GENERATORS = {
    "pcg64": np.random.PCG64,
    "philox": np.random.Philox,
    "sfc64": np.random.SFC64,
    "mt19937": np.random.MT19937,
}

ESTIMATE_NAMES = ("peter_win", "peter_multi_share", "james_win", "james_lopsided_share")


@dataclass(frozen=True)
class ArgumentDecomposition:
    p: Probability
    peter_win: Probability
    peter_multi: Probability
    peter_multi_share: ExactRational
    james_win: Probability
    james_lopsided: Probability
    james_lopsided_share: ExactRational

    @property
    def a_beats_b(self) -> bool:
        """Whether one success in six dice is strictly likelier than two in twelve."""
        return self.peter_win > self.james_win

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": str(self.p),
            "peter_win": str(self.peter_win),
            "peter_multi": str(self.peter_multi),
            "peter_multi_share": str(self.peter_multi_share),
            "james_win": str(self.james_win),
            "james_lopsided": str(self.james_lopsided),
            "james_lopsided_share": str(self.james_lopsided_share),
            "a_beats_b": self.a_beats_b,
        }


class SequenceScore(NamedTuple):
    peter_wins: int
    james_wins: int
    total_successes: int


@dataclass(frozen=True)
class SimReport:
    p: Probability
    trials: int
    seed: int
    generator_id: str
    counts: Dict[str, int] = field(default_factory=dict)
    estimates: Dict[str, float] = field(default_factory=dict)
    std_errors: Dict[str, float] = field(default_factory=dict)

    def z_scores(self, exact: ArgumentDecomposition) -> Dict[str, float]:
        """Distance of each estimate from its exact value, in standard errors."""
        scores = {}
        for name in ESTIMATE_NAMES:
            delta = self.estimates[name] - float(getattr(exact, name))
            se = self.std_errors[name]
            if se > 0:
                scores[name] = delta / se
            else:
                scores[name] = 0.0 if delta == 0 else math.copysign(math.inf, delta)
        return scores

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": str(self.p),
            "trials": self.trials,
            "seed": self.seed,
            "generator_id": self.generator_id,
            "counts": dict(self.counts),
            "estimates": dict(self.estimates),
            "std_errors": dict(self.std_errors),
        }


def _require_interior(p: Probability) -> None:
    if p == 0 or p == 1:
        raise DegenerateProbabilityError(
            f"The decomposition needs 0 < p < 1, got {p}", probability=p
        )


def decompose_argument(p: Any) -> ArgumentDecomposition:
    """Exact win and sub-event probabilities for Peter (six dice) and James (twelve)."""
    p = as_probability(p)
    _require_interior(p)
    peter_win = binom_tail(DICE_PER_THROW, 1, p)
    peter_multi = binom_tail(DICE_PER_THROW, 2, p)
    james_win = binom_tail(2 * DICE_PER_THROW, 2, p)
    # The two halves are disjoint ways of being lopsided.
    james_lopsided = Probability(2 * peter_multi * binom_pmf(DICE_PER_THROW, 0, p))
    return ArgumentDecomposition(
        p=p,
        peter_win=peter_win,
        peter_multi=peter_multi,
        peter_multi_share=peter_multi / peter_win,
        james_win=james_win,
        james_lopsided=james_lopsided,
        james_lopsided_share=james_lopsided / james_win,
    )


def james_win_by_convolution(p: Any) -> Probability:
    """James's chance as the sum over both halves: P(i + j >= 2) for independent i, j."""
    row = pmf_row(DICE_PER_THROW, p)
    total = sum(
        (row[i] * row[j] for i, j in itertools.product(range(len(row)), repeat=2) if i + j >= 2),
        Fraction(0),
    )
    return Probability(total)


def score_sequence(seq: ThrowSequence) -> SequenceScore:
    """Peter wins each throw with a success; James wins each pair with two or more."""
    pairs = seq.pairs()
    return SequenceScore(
        peter_wins=sum(1 for t in seq.throws if t >= 1),
        james_wins=sum(1 for a, b in pairs if a + b >= 2),
        total_successes=sum(seq.throws),
    )


def win_rates(seq: ThrowSequence) -> Tuple[ExactRational, ExactRational]:
    """Peter's wins per throw and James's wins per pair on the same throws."""
    score = score_sequence(seq)
    if not seq.throws:
        return Fraction(0), Fraction(0)
    return (
        Fraction(score.peter_wins, len(seq)),
        Fraction(score.james_wins, len(seq) // 2),
    )


def favours_james(seq: ThrowSequence) -> bool:
    peter_rate, james_rate = win_rates(seq)
    return james_rate > peter_rate


def dominance_counterexample() -> ThrowSequence:
    """A sequence on which James out-wins Peter: two successes, then none."""
    return ThrowSequence((2, 0))


def equal_luck_scenario(num_throws: int = 16) -> ThrowSequence:
    """One success in every pair of throws: a six in half the throws, and James wins nothing.

    Scored on the same throws, Peter wins half of them: sixteen throws hold
    eight successes and give Peter eight wins.
    """
    if num_throws < 0 or num_throws % 2:
        raise PreconditionError(f"num_throws must be a non-negative even count, got {num_throws}")
    return ThrowSequence((1, 0) * (num_throws // 2))


def dominance_violations(length: int = 2) -> List[ThrowSequence]:
    """Every sequence of ``length`` throws on which James's rate beats Peter's."""
    if length < 2 or length % 2:
        raise PreconditionError(f"length must be a positive even count, got {length}")
    if length > MAX_DOMINANCE_SEARCH_LENGTH:
        raise PreconditionError(
            f"length {length} exceeds the search limit of {MAX_DOMINANCE_SEARCH_LENGTH}"
        )
    violations = [
        seq
        for seq in (
            ThrowSequence(throws)
            for throws in itertools.product(range(DICE_PER_THROW + 1), repeat=length)
        )
        if favours_james(seq)
    ]
    logger.debug("Found %d dominance violations among length-%d sequences", len(violations), length)
    return violations


def _bit_generator(generator_id: str):
    try:
        return BIT_GENERATORS[generator_id]
    except KeyError:
        raise UnknownGeneratorError(
            f"Unknown generator_id {generator_id!r}; choose one of {sorted(BIT_GENERATORS)}"
        ) from None


def _simulate_chunk(
    bit_generator, seed_sequence: np.random.SeedSequence, size: int, p: float
) -> np.ndarray:
    """Counts of (peter_win, peter_multi, james_win, james_lopsided) over ``size`` trials."""
    rng = np.random.Generator(bit_generator(seed_sequence))
    dice = rng.random((size, 2, DICE_PER_THROW)) < p
    halves = dice.sum(axis=2)
    first, second = halves[:, 0], halves[:, 1]
    lopsided = ((first >= 2) & (second == 0)) | ((first == 0) & (second >= 2))
    return np.array(
        [
            np.count_nonzero(first >= 1),
            np.count_nonzero(first >= 2),
            np.count_nonzero(first + second >= 2),
            np.count_nonzero(lopsided),
        ],
        dtype=np.int64,
    )


def _proportion(successes: int, total: int) -> Tuple[float, float]:
    if total == 0:
        return 0.0, 0.0
    estimate = successes / total
    return estimate, math.sqrt(estimate * (1.0 - estimate) / total)


def monte_carlo_decomposition(
    p: Any,
    cfg: SimConfig,
    processor: Optional[ParallelProcessor] = None,
    progress_callback: Optional[Callable[[int, int], None]] = None,
) -> SimReport:
    """Estimate the decomposition by simulating twelve dice per trial.

    Deterministic in (trials, seed, generator_id) for any number of workers.
    Shares are estimated over the trials where the conditioning event
    occurred; an empty conditioning set gives estimate 0 with standard error 0.
    """
    p = as_probability(p)
    bit_generator = _bit_generator(cfg.generator_id)
    processor = processor or ParallelProcessor()

    n_chunks = -(-cfg.trials // CHUNK_TRIALS)
    seeds = np.random.SeedSequence(cfg.seed).spawn(n_chunks)
    sizes = [CHUNK_TRIALS] * (n_chunks - 1) + [cfg.trials - CHUNK_TRIALS * (n_chunks - 1)]
    p_float = float(p)

    logger.info(
        "Simulating %d trials in %d chunks (seed=%d, generator=%s)",
        cfg.trials,
        n_chunks,
        cfg.seed,
        cfg.generator_id,
    )
    chunk_counts = processor.process_items_parallel(
        list(zip(seeds, sizes)),
        lambda item: _simulate_chunk(bit_generator, item[0], item[1], p_float),
        batch_size=max(1, processor.max_workers * 4),
        progress_callback=progress_callback,
    )
    peter_win, peter_multi, james_win, james_lopsided = (
        int(c) for c in np.sum(chunk_counts, axis=0)
    )

    estimates, std_errors = {}, {}
    for name, (hits, total) in {
        "peter_win": (peter_win, cfg.trials),
        "peter_multi_share": (peter_multi, peter_win),
        "james_win": (james_win, cfg.trials),
        "james_lopsided_share": (james_lopsided, james_win),
    }.items():
        estimates[name], std_errors[name] = _proportion(hits, total)

    return SimReport(
        p=p,
        trials=cfg.trials,
        seed=cfg.seed,
        generator_id=cfg.generator_id,
        counts={
            "peter_win": peter_win,
            "peter_multi": peter_multi,
            "james_win": james_win,
            "james_lopsided": james_lopsided,
        },
        estimates=estimates,
        std_errors=std_errors,
    )
