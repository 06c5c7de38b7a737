"""Main CLI application using Typer.

Usage:
    ackermann-goodstein nf --m 21 --base 2
    ackermann-goodstein sandwich --m 16 --base 2
    ackermann-goodstein bch 4 --from 2 --to 3
    ackermann-goodstein goodstein --seed 3 --format json
    ackermann-goodstein verify --suite roundtrip --limit 1000
"""

import sys
from typing import Optional

import typer

from ackermann_goodstein import __version__
from ackermann_goodstein.cli import ordinals, process, terms, verify
from ackermann_goodstein.cli.common import console
from ackermann_goodstein.config import get_settings
from ackermann_goodstein.logging import setup_logging

app = typer.Typer(
    name="ackermann-goodstein",
    help="Ackermannian normal forms, Veblen ordinals and the Goodstein process",
    no_args_is_help=True,
)

# Numbers and terms
app.command("nf")(terms.nf)
app.command("sandwich")(terms.sandwich_rows)
app.command("eval")(terms.evaluate)
app.command("bch")(terms.bch)
app.command("pred")(terms.pred)
app.command("validate")(terms.validate)

# Ordinals
app.command("ord")(ordinals.ordinal)
app.command("fs")(ordinals.fs)
app.command("stepdown")(ordinals.stepdown_chain)
app.command("gamma")(ordinals.gamma_term)

# Process and checks
app.command("goodstein")(process.goodstein)
app.command("verify")(verify.verify)


@app.callback()
def main(
    verbose: bool = typer.Option(
        False, "--verbose", "-v",
        help="Enable verbose logging",
    ),
    log_format: Optional[str] = typer.Option(
        None, "--log-format",
        help="Log format: text or json (default from settings)",
    ),
) -> None:
    """Ackermann Goodstein CLI - normal forms, base change and ordinal descent.

    Numbers are written in the base-parametrized Ackermann hierarchy
    A_a(k, b); ordinals are Veblen phi-terms below Gamma_0.
    """
    settings = get_settings()
    chosen = log_format or settings.log_format
    if chosen not in ("text", "json"):
        raise typer.BadParameter("log format must be text or json", param_hint="--log-format")
    setup_logging(
        level="DEBUG" if verbose else settings.log_level,
        format="json" if chosen == "json" else "text",
    )
    # Values up to the digit budget are printed in full
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


@app.command()
def version() -> None:
    """Show version information."""
    console.print(f"ackermann-goodstein version {__version__}")


if __name__ == "__main__":
    app()
