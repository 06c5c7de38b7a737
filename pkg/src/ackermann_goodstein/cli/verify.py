"""The verify command: run a named invariant suite."""

from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ackermann_goodstein.cli.common import (
    EXIT_FAILURE,
    MAX_CALLS_OPTION,
    MAX_DIGITS_OPTION,
    console,
    fail,
    make_budget,
)
from ackermann_goodstein.core.errors import UnknownSuite
from ackermann_goodstein.io.jsonl import append_jsonl
from ackermann_goodstein.verify.suites import SUITES, run_suite


def _list_suites() -> None:
    table = Table(title="Verification suites")
    table.add_column("name")
    table.add_column("default limit", justify="right")
    table.add_column("checks")
    for name in sorted(SUITES):
        entry = SUITES[name]
        table.add_row(name, str(entry.default_limit), entry.description)
    console.print(table)


def verify(
    suite: Optional[str] = typer.Option(None, "--suite", "-s", help="Suite name (see --list)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="RNG seed for sampled cases"),
    limit: Optional[int] = typer.Option(None, "--limit", "-n", min=1, help="Sweep size"),
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", help="Append the report to this JSONL file",
    ),
    list_suites: bool = typer.Option(False, "--list", help="List the available suites"),
    workers: int = typer.Option(1, "--workers", "-w", min=1, help="Threads for checking cases"),
    max_digits: Optional[int] = MAX_DIGITS_OPTION,
    max_calls: Optional[int] = MAX_CALLS_OPTION,
) -> None:
    """Run a named verification suite and exit 1 if any case fails.

    Example:
        ackermann-goodstein verify --suite roundtrip --limit 1000 --seed 7
    """
    if list_suites:
        _list_suites()
        return
    if suite is None:
        raise typer.BadParameter("give --suite NAME or --list")

    try:
        report = run_suite(suite, seed, limit, make_budget(max_digits, max_calls), workers)
    except UnknownSuite as e:
        raise typer.BadParameter(str(e)) from e

    table = Table(title=f"{report.suite} (seed {report.seed}, limit {report.limit})")
    table.add_column("checked", justify="right")
    table.add_column("failures", justify="right")
    table.add_column("skipped", justify="right")
    table.add_row(str(report.checked), str(report.failures), str(report.skipped))
    console.print(table)
    for detail in report.details:
        console.print(f"  [red]-[/red] {detail}")

    if out is not None:
        try:
            append_jsonl(out, [report])
        except OSError as e:
            fail(e, "verify")
        console.print(f"Report appended to {out}")

    if not report.passed:
        console.print(f"[red]FAILED[/red] {report.failures} case(s)")
        raise typer.Exit(EXIT_FAILURE)
    console.print("[green]PASSED[/green]")
