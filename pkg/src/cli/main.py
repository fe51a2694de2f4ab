"""Main entry point for the Pepys dice CLI."""

import click

from cli.commands import (
    EXIT_DOMAIN_ERROR,
    approx,
    argument,
    crossover,
    dominance,
    median,
    modal,
    oracle,
    ordering,
    output,
    score,
    sequence,
    simulate,
    solve,
)
from cli.config_parser import load_and_merge_config
from cli.output import setup_logging
from utils.exceptions import PepysError
from utils.logger import LoggingConfiguration


@click.group()
@click.version_option(version="1.0.0", prog_name="pepys-dice")
@click.option("--config", "config_path", default=None, help="Path to a JSON configuration file.")
@click.option("--log-config", default=None, help="Path to a YAML logging configuration.")
@click.option("-v", "--verbose", count=True, help="Increase verbosity level (-v, -vv, -vvv).")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker threads for grids and simulations.")
@click.pass_context
def cli(ctx, config_path, log_config, verbose, workers):
    """Newton-Pepys dice toolkit - exact binomial tails and the dominance argument.

    Probabilities are exact fractions until rendered; every command prints
    plain text, JSON or CSV.
    """
    ctx.ensure_object(dict)
    if log_config:
        LoggingConfiguration.setup_logging(log_config)
    else:
        setup_logging(verbose)

    try:
        ctx.obj["config"] = load_and_merge_config(config_path, cli_args={"workers": workers})
    except PepysError as e:
        output.error(f"Configuration error: {e}")
        ctx.exit(EXIT_DOMAIN_ERROR)


cli.add_command(solve)
cli.add_command(sequence)
cli.add_command(approx)
cli.add_command(median)
cli.add_command(crossover)
cli.add_command(ordering)
cli.add_command(argument)
cli.add_command(simulate)
cli.add_command(oracle)
cli.add_command(score)
cli.add_command(dominance)
cli.add_command(modal)


def main():
    """Main entry point function."""
    cli(prog_name="pepys-dice")


if __name__ == "__main__":
    main()
