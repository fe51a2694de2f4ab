"""Report rendering (plain, JSON, CSV) and Rich diagnostics for the CLI."""

import json
import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional

import click
import pandas as pd
from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn
from rich.table import Table
from rich.text import Text

OUTPUT_FORMATS = ("plain", "json", "csv")

# Wide enough that exact fractions are never wrapped or truncated.
REPORT_WIDTH = 4096

stderr_console = Console(stderr=True)


@dataclass
class Report:
    """Everything one command prints; every format is rendered from this."""

    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any]
    rows: List[Dict[str, Any]] = field(default_factory=list)

    def to_json_dict(self) -> Dict[str, Any]:
        results = dict(self.results)
        if self.rows:
            results["rows"] = self.rows
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": results,
            "exact_fractions_as_strings": True,
        }


def _flatten(data: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    flat: Dict[str, Any] = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, prefix=f"{name}."))
        else:
            flat[name] = value
    return flat


def _plain_value(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_plain_value(v) for v in value) + "]"
    return str(value)


class RichOutput:
    """Provides rich terminal output with consistent styling."""

    def __init__(self, console: Optional[Console] = None, err_console: Optional[Console] = None):
        """Initialize the output handler.

        Args:
            console: Console for reports (stdout)
            err_console: Console for diagnostics (stderr)
        """
        self.console = console or Console(width=REPORT_WIDTH, highlight=False, soft_wrap=True)
        self.err_console = err_console or stderr_console

    def error(self, message: str):
        """Display an error message on stderr."""
        self.err_console.print(Text(f"✗ {message}", style="red"))

    def warning(self, message: str):
        """Display a warning message on stderr."""
        self.err_console.print(Text(f"! {message}", style="yellow"))

    @contextmanager
    def progress_bar(self, description: str) -> Iterator[Callable[[int, int], None]]:
        """Show a transient progress bar on stderr.

        Yields a ``(done, total)`` callback suitable for
        ``ParallelProcessor.process_items_parallel``.
        """
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TaskProgressColumn(),
            console=self.err_console,
            transient=True,
        ) as progress:
            task = progress.add_task(description, total=None)

            def update(done: int, total: int) -> None:
                progress.update(task, completed=done, total=total)

            yield update

    def table(self, title: str, rows: List[Dict[str, Any]]) -> Table:
        """Create and display a formatted table of row dictionaries."""
        table = Table(title=title, show_header=True, header_style="bold magenta", box=box.SIMPLE)
        columns = list(rows[0].keys()) if rows else []
        for column in columns:
            table.add_column(column, no_wrap=True)
        for row in rows:
            table.add_row(*[Text(_plain_value(row.get(column))) for column in columns])
        self.console.print(table)
        return table

    def plain(self, report: Report):
        """Key/value lines for results, then a table for rows."""
        self.console.print(Text(f"{report.command}", style="bold cyan"))
        for key, value in _flatten(report.inputs, prefix="input.").items():
            self.console.print(Text(f"{key}: {_plain_value(value)}"))
        for key, value in _flatten(report.results).items():
            self.console.print(Text(f"{key}: {_plain_value(value)}"))
        if report.rows:
            self.table(report.command, report.rows)

    def emit(self, report: Report, output_format: str = "plain"):
        if output_format == "json":
            click.echo(json.dumps(report.to_json_dict(), indent=2, default=str))
        elif output_format == "csv":
            rows = report.rows or [_flatten(report.results)]
            frame = pd.DataFrame([{k: _csv_value(v) for k, v in row.items()} for row in rows])
            click.echo(frame.to_csv(index=False), nl=False)
        else:
            self.plain(report)


def _csv_value(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, default=str)
    return value


def setup_logging(verbosity: int = 0):
    """Configure logging with a Rich handler on stderr.

    Args:
        verbosity: Verbosity level (0=WARNING, 1=INFO, 2=DEBUG, 3+=DEBUG with locals)
    """
    if verbosity == 0:
        level = logging.WARNING
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.DEBUG

    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[
            RichHandler(
                console=stderr_console,
                rich_tracebacks=True,
                tracebacks_show_locals=(verbosity >= 3),
                show_time=True,
                show_path=(verbosity >= 2),
            )
        ],
        force=True,
    )

    for logger_name in ("core", "cli", "utils"):
        logging.getLogger(logger_name).setLevel(level)
