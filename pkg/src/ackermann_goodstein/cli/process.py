"""The goodstein command: run the process and print or save its trace."""

from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ackermann_goodstein.cli.common import (
    EXIT_BUDGET,
    MAX_CALLS_OPTION,
    MAX_DIGITS_OPTION,
    console,
    fail,
    make_budget,
)
from ackermann_goodstein.core.errors import GoodsteinError
from ackermann_goodstein.core.goodstein import Budget, Mode, grun
from ackermann_goodstein.io.jsonl import append_jsonl
from ackermann_goodstein.models.trace import TraceDocument


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


def _print_table(document: TraceDocument) -> None:
    table = Table(title=f"Goodstein trace from {document.seed} ({document.mode})")
    table.add_column("i", justify="right")
    table.add_column("base", justify="right")
    table.add_column("normal form")
    table.add_column("ordinal")
    table.add_column("descent")
    for entry in document.entries:
        mark = "" if entry.descent_ok is None else ("yes" if entry.descent_ok else "[red]no[/red]")
        table.add_row(str(entry.i), str(entry.base), entry.nf, entry.ordinal, mark)
    console.print(table)

    outcome = document.outcome
    if outcome.kind == "terminated":
        console.print(f"[green]Terminated[/green] at i={outcome.index}")
    else:
        console.print(f"[yellow]Stopped[/yellow] at i={outcome.index} ({outcome.reason})")


def goodstein(
    seed: int = typer.Option(..., "--seed", min=0, help="Starting value G_0"),
    mode: Mode = typer.Option(Mode.CONCRETE, "--mode", help="State representation"),
    max_steps: Optional[int] = typer.Option(
        None, "--max-steps", min=0, help="Step cap (default from settings)",
    ),
    output_format: OutputFormat = typer.Option(
        OutputFormat.TEXT, "--format", "-f", help="Output format",
    ),
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", help="Append the trace document to this JSONL file",
    ),
    max_digits: Optional[int] = MAX_DIGITS_OPTION,
    max_calls: Optional[int] = MAX_CALLS_OPTION,
) -> None:
    """Run the Ackermannian Goodstein process from a seed.

    Exits 3 when a state no longer fits the budget.

    Example:
        ackermann-goodstein goodstein --seed 3 --mode concrete --max-steps 10 --format json
    """
    try:
        trace = grun(seed, mode, max_steps, make_budget(max_digits, max_calls))
        document = TraceDocument.from_trace(trace)
        if out is not None:
            append_jsonl(out, [document])
    except (GoodsteinError, OSError) as e:
        fail(e, "goodstein")

    if output_format is OutputFormat.JSON:
        typer.echo(document.model_dump_json(indent=2))
    else:
        _print_table(document)
        if out is not None:
            console.print(f"Trace appended to {out}")

    if isinstance(trace.outcome, Budget) and trace.outcome.reason == "blowup":
        raise typer.Exit(EXIT_BUDGET)
