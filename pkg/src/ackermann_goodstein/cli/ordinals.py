"""Commands on Veblen ordinal terms: ord, fs, stepdown, gamma."""

from typing import Optional

import typer
from rich.table import Table

from ackermann_goodstein.cli.common import (
    BASE_OPTION,
    EXIT_BUDGET,
    EXIT_FAILURE,
    console,
    fail,
    read_ordinal,
    read_term,
)
from ackermann_goodstein.config import get_settings
from ackermann_goodstein.core.errors import GoodsteinError
from ackermann_goodstein.core.grammar import print_ordinal
from ackermann_goodstein.core.normal_form import omega_image
from ackermann_goodstein.core.ordinal import (
    ReachedZero,
    fund_seq,
    gamma,
    ord_canonical,
    ord_validate,
    stepdown,
    to_ordinal,
)


def ordinal(
    value: str = typer.Argument(..., help="Decimal number, A-term or phi-term"),
    base: int = BASE_OPTION,
) -> None:
    """Print the phi-term of a number or A-term, or validate a phi-term.

    Numbers are read in base k. A phi-term is checked for normal form and
    printed with equal summands merged.

    Example:
        ackermann-goodstein ord 16 --base 2
    """
    text = value.strip()
    if text.isdigit():
        try:
            image = omega_image(int(text), base)
        except GoodsteinError as e:
            fail(e, "ord")
        typer.echo(print_ordinal(image))
        return
    if text.startswith("A"):
        typer.echo(print_ordinal(to_ordinal(read_term(text))))
        return

    xi = read_ordinal(text)
    if not ord_validate(xi):
        console.print("[red]Invalid:[/red] not a Veblen normal form")
        raise typer.Exit(EXIT_FAILURE)
    typer.echo(print_ordinal(ord_canonical(xi)))


def fs(
    value: str = typer.Argument(..., help="Nonzero phi-term or decimal number"),
    x: int = typer.Option(..., "--x", min=0, help="Index into the fundamental sequence"),
) -> None:
    """Print one fundamental sequence step, xi[x].

    Example:
        ackermann-goodstein fs "phi(0,phi(0,0))" --x 3
    """
    xi = read_ordinal(value)
    try:
        result = fund_seq(xi, x)
    except GoodsteinError as e:
        fail(e, "fs")
    typer.echo(print_ordinal(result))


def stepdown_chain(
    value: str = typer.Argument(..., help="phi-term or decimal number to step down"),
    max_steps: Optional[int] = typer.Option(
        None, "--max", min=1, help="Step cap (default from settings)",
    ),
) -> None:
    """Show the chain <2>xi, <3>xi, ... down to zero or the step cap.

    Exits 3 when the cap is reached first.

    Example:
        ackermann-goodstein stepdown "phi(0,phi(0,0))" --max 10
    """
    xi = read_ordinal(value)
    cap = max_steps or get_settings().default_max_steps
    try:
        report = stepdown(xi, cap)
    except GoodsteinError as e:
        fail(e, "stepdown")

    table = Table(title=f"stepdown of {print_ordinal(xi)}")
    table.add_column("n", justify="right")
    table.add_column("<n>xi")
    for n, term in report.steps:
        table.add_row(str(n), print_ordinal(term))
    console.print(table)

    if isinstance(report.outcome, ReachedZero):
        console.print(f"[green]Reached 0[/green] at <{report.outcome.at}>")
        return
    console.print(f"[yellow]Budget exceeded[/yellow] after {cap} steps")
    raise typer.Exit(EXIT_BUDGET)


def gamma_term(
    n: int = typer.Option(..., "--n", min=0, help="Index of gamma"),
) -> None:
    """Print gamma_n, where gamma_0 = 0 and gamma_{n+1} = phi(gamma_n, 0).

    Example:
        ackermann-goodstein gamma --n 2
    """
    typer.echo(print_ordinal(gamma(n)))
