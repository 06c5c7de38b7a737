"""Commands on numbers and Ackermann terms: nf, sandwich, eval, bch, pred, validate."""

import json
from typing import Optional

import typer
from rich.table import Table

from ackermann_goodstein.cli.common import (
    BASE_OPTION,
    EXIT_BUDGET,
    EXIT_FAILURE,
    MAX_CALLS_OPTION,
    MAX_DIGITS_OPTION,
    console,
    fail,
    make_budget,
    read_number_or_term,
    read_term,
)
from ackermann_goodstein.core.errors import GoodsteinError
from ackermann_goodstein.core.expansion import predecessor
from ackermann_goodstein.core.grammar import print_ordinal, print_term
from ackermann_goodstein.core.normal_form import (
    VALID,
    Invalid,
    base_change,
    eval_term,
    normal_form,
    sandwich,
    validate_nf,
)
from ackermann_goodstein.core.ordinal import to_ordinal
from ackermann_goodstein.core.types import Value


def nf(
    m: int = typer.Option(..., "--m", min=0, help="Natural number to normalize"),
    base: int = BASE_OPTION,
) -> None:
    """Print the hereditary base-k normal form of a number.

    Example:
        ackermann-goodstein nf --m 21 --base 2
    """
    try:
        term = normal_form(m, base)
    except GoodsteinError as e:
        fail(e, "nf")
    typer.echo(print_term(term))


def sandwich_rows(
    m: int = typer.Option(..., "--m", min=1, help="Positive number to sandwich"),
    base: int = BASE_OPTION,
    as_json: bool = typer.Option(False, "--json", help="Print the rows as a JSON list"),
) -> None:
    """Show the sandwiching sequence (a_i, b_i, m_i) of a number.

    Example:
        ackermann-goodstein sandwich --m 16 --base 2
    """
    try:
        seq = sandwich(m, base)
    except GoodsteinError as e:
        fail(e, "sandwich")

    if as_json:
        rows = [{"i": i, "a": s.index, "b": s.arg, "m": s.value} for i, s in enumerate(seq, 1)]
        typer.echo(json.dumps(rows))
        return

    table = Table(title=f"sandwich({m}, {base})")
    table.add_column("i", justify="right")
    table.add_column("a_i", justify="right")
    table.add_column("b_i", justify="right")
    table.add_column("m_i", justify="right")
    for i, step in enumerate(seq, 1):
        table.add_row(str(i), str(step.index), str(step.arg), str(step.value))
    console.print(table)
    console.print(f"penum = {seq.penum}")


def evaluate(
    term: str = typer.Argument(..., help="Term such as 'A(A(0,0),0)+A(0,0)'"),
    base: int = BASE_OPTION,
    max_digits: Optional[int] = MAX_DIGITS_OPTION,
    max_calls: Optional[int] = MAX_CALLS_OPTION,
) -> None:
    """Evaluate a term in base k, or exit 3 if it exceeds the budget.

    Example:
        ackermann-goodstein eval "A(A(0,0),A(0,0))+A(0,0)" --base 2
    """
    parsed = read_term(term)
    try:
        result = eval_term(parsed, base, make_budget(max_digits, max_calls))
    except GoodsteinError as e:
        fail(e, "eval")
    if not isinstance(result, Value):
        console.print("[yellow]Exceeded[/yellow]")
        raise typer.Exit(EXIT_BUDGET)
    typer.echo(str(result.n))


def bch(
    value: str = typer.Argument(..., help="Decimal number or term written in base --from"),
    from_base: int = typer.Option(2, "--from", min=2, help="Base the input is written in"),
    to_base: Optional[int] = typer.Option(None, "--to", min=3, help="Target base"),
    omega: bool = typer.Option(False, "--omega", help="Replace the base by omega instead"),
    max_digits: Optional[int] = MAX_DIGITS_OPTION,
    max_calls: Optional[int] = MAX_CALLS_OPTION,
) -> None:
    """Change the base of a number or term.

    Prints the image term, and its value when it fits the budget. With
    --omega the ordinal image is printed instead.

    Example:
        ackermann-goodstein bch 4 --from 2 --to 3
    """
    if not omega and to_base is None:
        raise typer.BadParameter("give --to L or --omega")
    if to_base is not None and to_base <= from_base:
        raise typer.BadParameter(f"--to must exceed --from, got {from_base} -> {to_base}")
    term = read_number_or_term(value, from_base)
    budget = make_budget(max_digits, max_calls)
    try:
        verdict = validate_nf(term, from_base, budget)
    except GoodsteinError as e:
        fail(e, "bch")
    if isinstance(verdict, Invalid):
        console.print(f"[red]Error:[/red] not a base-{from_base} normal form: {verdict.reason}")
        raise typer.Exit(EXIT_FAILURE)

    if omega:
        typer.echo(print_ordinal(to_ordinal(term)))
        return

    assert to_base is not None
    try:
        image = base_change(term, from_base, to_base)
        result = eval_term(image, to_base, budget)
    except GoodsteinError as e:
        fail(e, "bch")
    typer.echo(print_term(image))
    if isinstance(result, Value):
        typer.echo(f"value: {result.n}")
    else:
        console.print("value: [yellow]Exceeded[/yellow]")


def pred(
    term: str = typer.Argument(..., help="Nonzero base-k normal term or decimal number"),
    base: int = BASE_OPTION,
    max_digits: Optional[int] = MAX_DIGITS_OPTION,
    max_calls: Optional[int] = MAX_CALLS_OPTION,
) -> None:
    """Print the normal form of val(t) - 1, computed on terms.

    Example:
        ackermann-goodstein pred "A(A(0,0),0)" --base 2
    """
    parsed = read_number_or_term(term, base)
    budget = make_budget(max_digits, max_calls)
    try:
        verdict = validate_nf(parsed, base, budget)
        if isinstance(verdict, Invalid):
            console.print(f"[red]Error:[/red] not a base-{base} normal form: {verdict.reason}")
            raise typer.Exit(EXIT_FAILURE)
        result = predecessor(parsed, base, budget)
    except GoodsteinError as e:
        fail(e, "pred")
    typer.echo(print_term(result))


def validate(
    term: str = typer.Argument(..., help="Term to check"),
    base: int = BASE_OPTION,
    max_digits: Optional[int] = MAX_DIGITS_OPTION,
    max_calls: Optional[int] = MAX_CALLS_OPTION,
) -> None:
    """Check whether a term is the base-k normal form of its value.

    Exits 1 when it is not and 3 when the budget cannot decide.

    Example:
        ackermann-goodstein validate "A(0,0)+A(0,0)" --base 2
    """
    parsed = read_term(term)
    try:
        verdict = validate_nf(parsed, base, make_budget(max_digits, max_calls))
    except GoodsteinError as e:
        fail(e, "validate")
    if verdict is VALID:
        console.print("[green]Valid[/green]")
    elif isinstance(verdict, Invalid):
        console.print(f"[red]Invalid:[/red] {verdict.reason}")
        raise typer.Exit(EXIT_FAILURE)
    else:
        console.print("[yellow]Exceeded[/yellow]")
        raise typer.Exit(EXIT_BUDGET)
