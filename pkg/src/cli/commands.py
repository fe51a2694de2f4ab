"""CLI commands for the Pepys dice toolkit."""

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import click
import humanize

from cli.output import OUTPUT_FORMATS, Report, RichOutput
from core.approx import approx_report, modal_sequence
from core.exact_core import (
    binom_pmf,
    binom_tail,
    brute_force_tail,
    outcome_form,
    parse_rational,
    render_decimal,
)
from core.median_mode import central_summary, integer_mean_tails
from core.models import DiceSpace, PepysFamily, Probability, SimConfig, ThrowSequence, WagerMode
from core.newton_argument import (
    BIT_GENERATORS,
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
    crossover_probability,
    is_strictly_decreasing,
    ordering_table,
    pepys_sequence,
    ranking,
)
from core.parallel import ParallelProcessor
from utils.config_parser import AppConfig
from utils.exceptions import DomainError, InvalidProbabilityError, PepysError

logger = logging.getLogger(__name__)
output = RichOutput()

EXIT_DOMAIN_ERROR = 3


class ProbabilityType(click.ParamType):
    """Click parameter for an exact probability: ``a/b``, an integer or a decimal."""

    name = "probability"

    def convert(self, value, param, ctx):
        if isinstance(value, Probability):
            return value
        try:
            return Probability(value)
        except InvalidProbabilityError as e:
            self.fail(str(e), param, ctx)


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except DomainError as e:
            self.fail(str(e), param, ctx)


PROBABILITY = ProbabilityType()
RATIONAL = RationalType()


def report_options(func: Callable) -> Callable:
    """Add --format and --digits to a command."""
    func = click.option(
        "--digits",
        type=click.IntRange(min=1),
        default=None,
        help="Fractional digits in decimal renderings (default from config: 3).",
    )(func)
    func = click.option(
        "--format",
        "output_format",
        type=click.Choice(OUTPUT_FORMATS),
        default="plain",
        help="Output format.",
    )(func)
    return func


def prob_option(func: Callable) -> Callable:
    return click.option(
        "--prob",
        "-p",
        type=PROBABILITY,
        default=None,
        help="Success probability per die as a/b (default from config: 1/6).",
    )(func)


def _config(ctx: click.Context) -> AppConfig:
    return ctx.obj["config"]


def _prob(ctx: click.Context, prob: Optional[Probability]) -> Probability:
    if prob is not None:
        return prob
    return Probability(_config(ctx).compute.default_prob)


def _digits(ctx: click.Context, digits: Optional[int]) -> int:
    return digits if digits is not None else _config(ctx).compute.digits


def _processor(ctx: click.Context) -> ParallelProcessor:
    return ParallelProcessor(max_workers=_config(ctx).compute.workers)


def emit_report(ctx: click.Context, build: Callable[[], Report], output_format: str) -> None:
    """Build a report and print it; domain errors exit with code 3."""
    try:
        report = build()
    except PepysError as e:
        output.error(str(e))
        logger.debug("Domain error detail", exc_info=True)
        ctx.exit(EXIT_DOMAIN_ERROR)
        return
    output.emit(report, output_format)


def _mean_checks(n: int, p: Probability) -> Dict[str, Any]:
    mean = n * Fraction(p)
    checks: Dict[str, Any] = {"mean": str(mean), "mean_is_integer": mean.denominator == 1}
    if mean.denominator == 1:
        tails = integer_mean_tails(n, p)
        checks.update(
            {
                "upper_tail_at_mean": str(tails.upper),
                "lower_tail_at_mean": str(tails.lower),
                "both_tails_at_least_half": True,
            }
        )
    return checks


@click.command()
@click.option("--dice", "-n", type=click.IntRange(min=1), required=True, help="Number of dice N.")
@click.option("--threshold", "-k", type=click.IntRange(min=0), required=True, help="Successes needed k.")
@click.option("--exactly", is_flag=True, help="Compute P(X = k) instead of P(X >= k).")
@prob_option
@report_options
@click.pass_context
def solve(ctx, dice, threshold, exactly, prob, output_format, digits):
    """Exact chance of at least k successes among N dice."""
    p = _prob(ctx, prob)
    digits = _digits(ctx, digits)

    def build() -> Report:
        value = binom_pmf(dice, threshold, p) if exactly else binom_tail(dice, threshold, p)
        results = {
            "event": f"X = {threshold}" if exactly else f"X >= {threshold}",
            "probability": str(value),
            "outcome_form": outcome_form(value, dice, p),
            "decimal": render_decimal(value, digits),
        }
        results.update(_mean_checks(dice, p))
        return Report(
            command="solve",
            inputs={"dice": dice, "threshold": threshold, "prob": str(p), "exactly": exactly},
            results=results,
        )

    emit_report(ctx, build, output_format)


def _label(k: int) -> str:
    return chr(ord("A") + k - 1) if k <= 26 else f"#{k}"


@click.command()
@click.option("--unit", "-r", type=click.IntRange(min=1), default=None, help="Dice per unit r (default 6).")
@click.option("--kmax", type=click.IntRange(min=1), default=3, show_default=True, help="Largest k.")
@click.option("--exactly", is_flag=True, help="Use P(X = k) instead of P(X >= k).")
@prob_option
@report_options
@click.pass_context
def sequence(ctx, unit, kmax, exactly, prob, output_format, digits):
    """The Pepys sequence P(X >= k | N = r*k) for k = 1..kmax."""
    p = _prob(ctx, prob)
    digits = _digits(ctx, digits)
    unit = unit or _config(ctx).compute.unit

    def build() -> Report:
        family = PepysFamily(
            dice_per_unit=unit,
            k_max=kmax,
            success_prob=p,
            mode=WagerMode.EXACTLY if exactly else WagerMode.AT_LEAST,
        )
        values = pepys_sequence(family)
        order = ranking(values)
        rank_of = {k: position for position, k in enumerate(order, start=1)}
        rows = [
            {
                "k": k,
                "label": _label(k),
                "dice": unit * k,
                "probability": str(v),
                "outcome_form": outcome_form(v, unit * k, p),
                "decimal": render_decimal(v, digits),
                "rank": rank_of[k],
            }
            for k, v in enumerate(values, start=1)
        ]
        return Report(
            command="sequence",
            inputs={"unit": unit, "kmax": kmax, "prob": str(p), "mode": family.mode.value},
            results={
                "strictly_decreasing": is_strictly_decreasing(values) if len(values) >= 2 else None,
                "ranking": list(order),
                "most_likely": _label(order[0]),
            },
            rows=rows,
        )

    emit_report(ctx, build, output_format)


@click.command()
@click.option("--dice", "-n", type=click.IntRange(min=1), required=True, help="Number of dice N (N*p an integer).")
@prob_option
@report_options
@click.pass_context
def approx(ctx, dice, prob, output_format, digits):
    """Approximations to P(X >= Np) against the exact value."""
    p = _prob(ctx, prob)
    digits = _digits(ctx, digits)

    def build() -> Report:
        report = approx_report(dice, p)
        np_ = int(dice * Fraction(p))
        results = {
            "exact": str(report.exact),
            "exact_decimal": render_decimal(report.exact, digits),
            "modal_probability": str(binom_pmf(dice, np_, p)),
            "modal_tail": report.modal_tail,
            "demoivre_modal": report.demoivre_modal,
        }
        if report.chained is not None:
            exact_2dp = render_decimal(report.exact, 2)
            chained_2dp = render_decimal(report.chained, 2)
            results.update(
                {
                    "chained": report.chained,
                    "exact_2dp": exact_2dp,
                    "chained_2dp": chained_2dp,
                    "agree_to_two_places": exact_2dp == chained_2dp,
                }
            )
        results["abs_errors"] = report.abs_errors
        return Report(command="approx", inputs={"dice": dice, "prob": str(p)}, results=results)

    emit_report(ctx, build, output_format)


@click.command()
@click.option("--dice", "-n", type=click.IntRange(min=1), required=True, help="Number of dice N.")
@prob_option
@report_options
@click.pass_context
def median(ctx, dice, prob, output_format, digits):
    """Mean, median and modes, with the mean-median gap check."""
    p = _prob(ctx, prob)
    digits = _digits(ctx, digits)

    def build() -> Report:
        summary = central_summary(dice, p)
        results = summary.to_dict()
        results.pop("n")
        results.pop("p")
        results["mean_median_gap_decimal"] = render_decimal(summary.mean_median_gap, digits)
        results["coincident"] = summary.coincident
        results.update({k: v for k, v in _mean_checks(dice, p).items() if k != "mean"})
        return Report(command="median", inputs={"dice": dice, "prob": str(p)}, results=results)

    emit_report(ctx, build, output_format)


@click.command()
@click.option("--k1", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--k2", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--unit", "-r", type=click.IntRange(min=1), default=None, help="Dice per unit r (default 6).")
@click.option("--tol", type=RATIONAL, default=None, help="Bracket width, e.g. 1e-9 or 1/1000.")
@report_options
@click.pass_context
def crossover(ctx, k1, k2, unit, tol, output_format, digits):
    """Success probability at which the k1 and k2 propositions swap order."""
    digits = _digits(ctx, digits)
    unit = unit or _config(ctx).compute.unit
    tol = tol if tol is not None else parse_rational(_config(ctx).compute.tol)

    def build() -> Report:
        result = crossover_probability(k1, k2, unit, tol)
        results = result.to_dict()
        results["midpoint_decimal"] = render_decimal(result.midpoint, digits)
        return Report(
            command="crossover",
            inputs={"k1": k1, "k2": k2, "unit": unit, "tol": str(tol)},
            results=results,
        )

    emit_report(ctx, build, output_format)


DEFAULT_GRID_DENOMINATOR = 12


def _parse_grid(ctx, param, value: Optional[str]) -> Optional[List[Probability]]:
    if value is None:
        return None
    try:
        return [Probability(part) for part in value.replace(" ", "").split(",") if part != ""]
    except InvalidProbabilityError as e:
        raise click.BadParameter(str(e))


@click.command()
@click.option("--unit", "-r", type=click.IntRange(min=1), default=None, help="Dice per unit r (default 6).")
@click.option("--kmax", type=click.IntRange(min=1), default=3, show_default=True, help="Largest k.")
@click.option(
    "--grid",
    callback=_parse_grid,
    default=None,
    help="Comma-separated probabilities, e.g. 1/6,1/5,1/4 (default i/12 for i = 1..11).",
)
@click.option("--exactly", is_flag=True, help="Use P(X = k) instead of P(X >= k).")
@report_options
@click.pass_context
def ordering(ctx, unit, kmax, grid, exactly, output_format, digits):
    """Exact tails and their ranking at each success probability on a grid."""
    digits = _digits(ctx, digits)
    unit = unit or _config(ctx).compute.unit
    if grid is None:
        grid = [
            Probability(i, DEFAULT_GRID_DENOMINATOR) for i in range(1, DEFAULT_GRID_DENOMINATOR)
        ]
    if not grid:
        raise click.BadParameter("the grid needs at least one probability", param_hint="--grid")

    def build() -> Report:
        family = PepysFamily(
            dice_per_unit=unit,
            k_max=kmax,
            success_prob=grid[0],
            mode=WagerMode.EXACTLY if exactly else WagerMode.AT_LEAST,
        )
        description = f"Ranking {humanize.intcomma(len(grid))} grid points"
        with output.progress_bar(description) as advance:
            table = ordering_table(
                family, grid, processor=_processor(ctx), progress_callback=advance
            )
        rows = []
        for row in table:
            entry: Dict[str, Any] = {"p": str(row.p), "p_decimal": render_decimal(row.p, digits)}
            for k, tail in enumerate(row.tails, start=1):
                entry[f"tail_{k}"] = str(tail)
            entry["ranking"] = list(row.ranking)
            entry["most_likely"] = _label(row.ranking[0])
            rows.append(entry)
        changes = [
            {"from_p": str(before.p), "to_p": str(after.p), "ranking": list(after.ranking)}
            for before, after in zip(table, table[1:])
            if before.ranking != after.ranking
        ]
        return Report(
            command="ordering",
            inputs={
                "unit": unit,
                "kmax": kmax,
                "grid": [str(p) for p in grid],
                "mode": family.mode.value,
            },
            results={"grid_points": len(table), "ranking_changes": changes},
            rows=rows,
        )

    emit_report(ctx, build, output_format)


@click.command()
@prob_option
@report_options
@click.pass_context
def argument(ctx, prob, output_format, digits):
    """Exact decomposition of the Peter/James per-throw argument."""
    p = _prob(ctx, prob)
    digits = _digits(ctx, digits)

    def build() -> Report:
        decomposition = decompose_argument(p)
        counterexample = dominance_counterexample()
        score = score_sequence(counterexample)
        peter_rate, james_rate = win_rates(counterexample)
        results = decomposition.to_dict()
        results.pop("p")
        results.update(
            {
                "peter_multi_share_decimal": render_decimal(decomposition.peter_multi_share, digits),
                "james_lopsided_share_decimal": render_decimal(
                    decomposition.james_lopsided_share, digits
                ),
                "peter_multi_share_2dp": render_decimal(decomposition.peter_multi_share, 2),
                "james_lopsided_share_2dp": render_decimal(decomposition.james_lopsided_share, 2),
                "james_win_matches_convolution": james_win_by_convolution(p)
                == decomposition.james_win,
                "counterexample": {
                    "throws": list(counterexample.throws),
                    "peter_wins": score.peter_wins,
                    "james_wins": score.james_wins,
                    "peter_rate": str(peter_rate),
                    "james_rate": str(james_rate),
                },
            }
        )
        return Report(command="argument", inputs={"prob": str(p)}, results=results)

    emit_report(ctx, build, output_format)


@click.command()
@prob_option
@click.option("--trials", type=click.IntRange(min=1), default=None, help="Number of trials (default 10^6).")
@click.option("--seed", type=click.IntRange(min=0, max=2**64 - 1), default=None, help="64-bit seed.")
@click.option("--generator", "generator_id", type=click.Choice(sorted(BIT_GENERATORS)), default=None)
@report_options
@click.pass_context
def simulate(ctx, prob, trials, seed, generator_id, output_format, digits):
    """Monte Carlo check of the decomposition, reproducible from the seed."""
    p = _prob(ctx, prob)
    simulation = _config(ctx).simulation
    cfg = SimConfig(
        trials=trials or simulation.trials,
        seed=seed if seed is not None else simulation.seed,
        generator_id=generator_id or simulation.generator_id,
    )

    def build() -> Report:
        with output.progress_bar(f"Simulating {humanize.intcomma(cfg.trials)} trials") as advance:
            report = monte_carlo_decomposition(
                p, cfg, processor=_processor(ctx), progress_callback=advance
            )
        results = report.to_dict()
        for key in ("p", "trials", "seed", "generator_id"):
            results.pop(key)
        if 0 < p < 1:
            exact = decompose_argument(p)
            results["exact"] = {
                name: str(getattr(exact, name)) for name in report.estimates
            }
            results["z_scores"] = report.z_scores(exact)
        return Report(
            command="simulate",
            inputs={
                "prob": str(p),
                "trials": cfg.trials,
                "seed": cfg.seed,
                "generator_id": cfg.generator_id,
            },
            results=results,
        )

    emit_report(ctx, build, output_format)


@click.command()
@click.option("--dice", "-n", type=click.IntRange(min=1), required=True)
@click.option("--faces", type=click.IntRange(min=2), default=6, show_default=True)
@click.option("--success-faces", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--threshold", "-k", type=click.IntRange(min=0), required=True)
@click.option("--enum-cap", type=click.IntRange(min=1), default=None, help="Largest outcome count to enumerate.")
@report_options
@click.pass_context
def oracle(ctx, dice, faces, success_faces, threshold, enum_cap, output_format, digits):
    """Brute-force enumeration of every outcome, checked against the formula."""
    digits = _digits(ctx, digits)
    cap = enum_cap or _config(ctx).compute.enum_cap

    def build() -> Report:
        space = DiceSpace(num_dice=dice, faces=faces, success_faces=success_faces)
        enumerated = brute_force_tail(space, threshold, cap=cap)
        formula = binom_tail(dice, threshold, space.success_probability)
        return Report(
            command="oracle",
            inputs={
                "dice": dice,
                "faces": faces,
                "success_faces": success_faces,
                "threshold": threshold,
                "enum_cap": cap,
            },
            results={
                "outcomes": space.outcome_count,
                "probability": str(enumerated),
                "decimal": render_decimal(enumerated, digits),
                "formula": str(formula),
                "agrees_with_formula": enumerated == formula,
            },
        )

    emit_report(ctx, build, output_format)


def _parse_throws(ctx, param, value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(part) for part in value.replace(" ", "").split(",") if part != ""]
    except ValueError:
        raise click.BadParameter("throws must be comma-separated integers, e.g. 2,0")


@click.command()
@click.option("--throws", callback=_parse_throws, default=None, help="Success counts per throw, e.g. 2,0.")
@click.option("--equal-luck", type=click.IntRange(min=0), default=None, help="Score N throws with one success each.")
@report_options
@click.pass_context
def score(ctx, throws, equal_luck, output_format, digits):
    """Score a sequence of six-dice throws for Peter and for James."""
    if (throws is None) == (equal_luck is None):
        raise click.UsageError("Give exactly one of --throws or --equal-luck.")

    def build() -> Report:
        seq = ThrowSequence(tuple(throws)) if throws is not None else equal_luck_scenario(equal_luck)
        result = score_sequence(seq)
        peter_rate, james_rate = win_rates(seq)
        return Report(
            command="score",
            inputs={"throws": list(seq.throws)},
            results={
                "peter_wins": result.peter_wins,
                "james_wins": result.james_wins,
                "total_successes": result.total_successes,
                "peter_rate": str(peter_rate),
                "james_rate": str(james_rate),
                "favours_james": james_rate > peter_rate,
            },
        )

    emit_report(ctx, build, output_format)


@click.command()
@click.option("--length", type=click.IntRange(min=2), default=2, show_default=True)
@report_options
@click.pass_context
def dominance(ctx, length, output_format, digits):
    """List every throw sequence of a given length on which James out-wins Peter."""

    def build() -> Report:
        violations = dominance_violations(length)
        rows = []
        for seq in violations:
            peter_rate, james_rate = win_rates(seq)
            rows.append(
                {
                    "throws": list(seq.throws),
                    "peter_rate": str(peter_rate),
                    "james_rate": str(james_rate),
                }
            )
        return Report(
            command="dominance",
            inputs={"length": length},
            results={"violations": len(violations), "dominance_holds": not violations},
            rows=rows,
        )

    emit_report(ctx, build, output_format)


@click.command()
@click.option("--unit", "-r", type=click.IntRange(min=1), default=None)
@click.option("--kmax", type=click.IntRange(min=1), default=3, show_default=True)
@prob_option
@report_options
@click.pass_context
def modal(ctx, unit, kmax, prob, output_format, digits):
    """Modal probabilities P(X = k | N = r*k), whose decrease drives the ordering."""
    p = _prob(ctx, prob)
    digits = _digits(ctx, digits)
    unit = unit or _config(ctx).compute.unit

    def build() -> Report:
        values = modal_sequence(unit, kmax, p)
        rows = [
            {"k": k, "dice": unit * k, "probability": str(v), "decimal": render_decimal(v, digits)}
            for k, v in enumerate(values, start=1)
        ]
        return Report(
            command="modal",
            inputs={"unit": unit, "kmax": kmax, "prob": str(p)},
            results={
                "strictly_decreasing": is_strictly_decreasing(values) if len(values) >= 2 else None
            },
            rows=rows,
        )

    emit_report(ctx, build, output_format)
