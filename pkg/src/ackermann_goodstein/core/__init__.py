"""Core arithmetic: Ackermann values, normal forms, ordinals and the process."""

from ackermann_goodstein.core.ackermann import (
    ack_cmp_threshold,
    ack_eval,
    ack_exceeds,
    ack_iter,
    ack_iter_cmp_threshold,
    iterate_compare,
)
from ackermann_goodstein.core.expansion import (
    LeftExpansion,
    left_expansion,
    predecessor,
    right_expand,
)
from ackermann_goodstein.core.goodstein import (
    GoodsteinState,
    GoodsteinTrace,
    Mode,
    descent_check,
    fs_bound_check,
    goodstein_seed,
    grun,
    gstep,
    ordinal_of_state,
)
from ackermann_goodstein.core.grammar import (
    parse_ordinal,
    parse_term,
    print_ordinal,
    print_term,
)
from ackermann_goodstein.core.normal_form import (
    NFClass,
    SandwichSeq,
    base_change,
    classify,
    eval_term,
    normal_form,
    sandwich,
    validate_nf,
)
from ackermann_goodstein.core.ordinal import (
    Phi,
    fund_seq,
    gamma,
    ord_compare,
    ord_validate,
    preceq_k_bounded,
    stepdown,
    to_ordinal,
)
from ackermann_goodstein.core.terms import ONE, ZERO, Node, Term, term_norm
from ackermann_goodstein.core.types import EXCEEDED, EvalBudget, Value

__all__ = [
    # Values and budgets
    "EvalBudget",
    "Value",
    "EXCEEDED",
    # Ackermann hierarchy
    "ack_eval",
    "ack_cmp_threshold",
    "ack_iter",
    "ack_iter_cmp_threshold",
    "ack_exceeds",
    "iterate_compare",
    # Terms
    "Term",
    "Node",
    "ZERO",
    "ONE",
    "term_norm",
    "parse_term",
    "print_term",
    # Normal forms
    "SandwichSeq",
    "NFClass",
    "sandwich",
    "normal_form",
    "eval_term",
    "validate_nf",
    "classify",
    "base_change",
    "LeftExpansion",
    "right_expand",
    "left_expansion",
    "predecessor",
    # Ordinals
    "Phi",
    "parse_ordinal",
    "print_ordinal",
    "ord_validate",
    "ord_compare",
    "fund_seq",
    "stepdown",
    "preceq_k_bounded",
    "to_ordinal",
    "gamma",
    # Goodstein process
    "Mode",
    "GoodsteinState",
    "GoodsteinTrace",
    "gstep",
    "grun",
    "descent_check",
    "fs_bound_check",
    "ordinal_of_state",
    "goodstein_seed",
]
