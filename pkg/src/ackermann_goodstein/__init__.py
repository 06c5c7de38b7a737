"""
Ackermann Goodstein - normal forms and the Ackermannian Goodstein process.

This package provides:
- Budgeted evaluation of the base-parametrized Ackermann hierarchy
- Hereditary k-normal forms, base change and the symbolic predecessor
- Veblen ordinal terms with fundamental sequences below Gamma_0
- Goodstein traces with machine-checked ordinal descent
- Brute-force oracles and named verification suites
- A command-line interface with text and JSON output
"""

__version__ = "0.1.0"

from ackermann_goodstein.core import (
    EvalBudget,
    Mode,
    grun,
    normal_form,
    parse_ordinal,
    parse_term,
    predecessor,
    print_ordinal,
    print_term,
    sandwich,
    to_ordinal,
)

__all__ = [
    # Version
    "__version__",
    # Budgets
    "EvalBudget",
    # Terms and normal forms
    "parse_term",
    "print_term",
    "sandwich",
    "normal_form",
    "predecessor",
    # Ordinals
    "parse_ordinal",
    "print_ordinal",
    "to_ordinal",
    # Goodstein process
    "Mode",
    "grun",
]
