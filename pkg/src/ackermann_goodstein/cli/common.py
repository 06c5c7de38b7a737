"""Options and helpers shared by the command modules."""

from typing import NoReturn, Optional

import typer
from rich.console import Console

from ackermann_goodstein.core.errors import Blowup, TermSyntaxError
from ackermann_goodstein.core.grammar import parse_ordinal, parse_term
from ackermann_goodstein.core.normal_form import normal_form
from ackermann_goodstein.core.ordinal import OrdTerm, ord_from_int
from ackermann_goodstein.core.terms import Term
from ackermann_goodstein.core.types import EvalBudget
from ackermann_goodstein.logging import get_logger

logger = get_logger("cli")
console = Console()

EXIT_FAILURE = 1
EXIT_BUDGET = 3

BASE_OPTION = typer.Option(2, "--base", "-k", min=2, help="Base k of the Ackermann hierarchy")
MAX_DIGITS_OPTION = typer.Option(
    None, "--max-digits", min=1,
    help="Cap on decimal digits of intermediate values (default from settings)",
)
MAX_CALLS_OPTION = typer.Option(
    None, "--max-calls", min=1,
    help="Cap on Ackermann unfoldings per evaluation (default from settings)",
)


def make_budget(max_digits: Optional[int], max_calls: Optional[int]) -> EvalBudget:
    """The settings budget with command-line overrides applied."""
    return EvalBudget.from_settings().with_overrides(max_digits=max_digits, max_calls=max_calls)


def read_term(text: str) -> Term:
    """Parse a term argument, turning syntax errors into usage errors."""
    try:
        return parse_term(text)
    except TermSyntaxError as e:
        raise typer.BadParameter(str(e)) from e


def read_ordinal(text: str) -> OrdTerm:
    """Parse an ordinal argument; a decimal number n reads as phi(0,0)*n."""
    stripped = text.strip()
    if stripped.isdigit():
        return ord_from_int(int(stripped))
    try:
        return parse_ordinal(stripped)
    except TermSyntaxError as e:
        raise typer.BadParameter(str(e)) from e


def read_number_or_term(text: str, k: int) -> Term:
    """A decimal number becomes its base-k normal form; anything else is parsed."""
    stripped = text.strip()
    if stripped.isdigit():
        return normal_form(int(stripped), k)
    return read_term(stripped)


def fail(e: Exception, action: str) -> NoReturn:
    """Log and print an error, then exit with 3 for blowups and 1 otherwise."""
    logger.exception("%s failed", action)
    console.print(f"[red]Error:[/red] {e}")
    raise typer.Exit(EXIT_BUDGET if isinstance(e, Blowup) else EXIT_FAILURE)
