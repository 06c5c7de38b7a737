"""Right expansion, left expansion and the symbolic predecessor.

The predecessor of a normal term is computed on terms, block by block,
so that values far beyond any digit budget stay representable:

    X * p + q - 1            = X * (p - 1) + (X - 1)         (last block only)
    A_0(b) - 1, b > penum    = A_0(b - 1) * (k - 1) + (A_0(b - 1) - 1)
    A_0(b) - 1, b = penum    = b * p + q  with (p, q) = divmod(k**b - 1, b)
    A_a(b) - 1, a >= 1       = c_a * (k - 1) + (c_a - 1)

where c_a is the last member of the left expansion sequence of A_a(b).
Only the b = penum case at level 0 needs concrete arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from ackermann_goodstein.core.ackermann import (
    ack_cmp_threshold,
    ack_eval,
    ack_iter_cmp_threshold,
    check_base,
)
from ackermann_goodstein.core.errors import Blowup, GuardViolated, NotApplicable, ZeroTerm
from ackermann_goodstein.core.normal_form import (
    NFClass,
    classify,
    concrete,
    normal_form,
)
from ackermann_goodstein.core.terms import (
    ONE,
    ZERO,
    Block,
    Node,
    Term,
    Zero,
    blocks,
    from_blocks,
    head,
    nest,
    term_size,
)
from ackermann_goodstein.core.types import (
    MINUS_ONE,
    Arg,
    EvalBudget,
    LeqWith,
    Value,
    power_exceeds_digits,
)
from ackermann_goodstein.logging import get_logger

logger = get_logger("core.expansion")


def _value(t: Term, k: int, budget: EvalBudget, what: str) -> int:
    value = concrete(t, k, budget)
    if value is None:
        raise Blowup(f"{what} does not fit the digit budget")
    return value


def _single_head(t: Term) -> Node:
    if isinstance(t, Zero):
        raise ZeroTerm("expected a nonzero term")
    return head(t)


def right_expand(
    t: Term,
    s: int,
    ell: int,
    k: int,
    budget: EvalBudget | None = None,
    normal: bool = False,
) -> Term:
    """Build the term A_{a-1}^ell(A_a(b - s)) for a head block A_a(b).

    A_a(b) equals A_{a-1}^{s*k}(A_a(b - s)), so ell = s*k gives back the
    value of the head. A_a(-1) is written as the term for 1.

    Args:
        t: Term whose head block is A_a(b) with a >= 1
        s: Arguments to step back, 1 <= s <= b + 1
        ell: Outer applications, 1 <= ell <= k
        k: Base
        budget: Budget for evaluating a and b
        normal: Require the result to be base-k normal as written

    Raises:
        NotApplicable: If a is 0 or s, ell are out of range
        GuardViolated: If normal is set and A_{a-1}(b) <= result < A_a(b)
            fails or the head is not in the b = penum case
        Blowup: If a or b do not fit the budget

    Example:
        >>> print_term(right_expand(parse_term("A(A(0,0),A(0,0))"), 2, 2, 2))
        'A(0,A(0,A(0,0)))'
    """
    check_base(k)
    budget = budget or EvalBudget.from_settings()
    block = _single_head(t)
    a = _value(block.index, k, budget, "head index")
    b = _value(block.arg, k, budget, "head argument")
    if a < 1:
        raise NotApplicable("right expansion needs a head index of at least 1")
    if not 1 <= s <= b + 1 or not 1 <= ell <= k:
        raise NotApplicable(
            f"need 1 <= s <= {b + 1} and 1 <= ell <= {k}, got s={s}, ell={ell}"
        )

    inner = ONE if s == b + 1 else Node(block.index, normal_form(b - s, k))
    result = nest(normal_form(a - 1, k), inner, ell)

    if normal:
        if classify(block, k) is not NFClass.CASE_B:
            raise GuardViolated("right expansion is normal only when b = penum")
        # result < A_a(b) since A_{a-1} is injective and ell < s*k
        if ell >= s * k:
            raise GuardViolated("the expansion equals A_a(b) itself")
        # A_{a-1}(b) <= result  iff  b <= A_{a-1}^{ell-1}(A_a(b - s))
        start: Arg = MINUS_ONE if s == b + 1 else b - s
        floor = ack_cmp_threshold(a, k, start, b - 1)
        if isinstance(floor, LeqWith):
            below = ack_iter_cmp_threshold(a - 1, k, floor.value, ell - 1, b - 1)
            if isinstance(below, LeqWith):
                raise GuardViolated("the expansion lies below A_{a-1}(b)")
    return result


@dataclass(frozen=True)
class LeftExpansion:
    """The sequence c_0, ..., c_a for a head block A_a(b)."""

    head: Node
    k: int
    c: tuple[Term, ...]

    @property
    def last(self) -> Term:
        return self.c[-1]


def _first_member(block: Node, a: int, k: int, budget: EvalBudget) -> Term:
    """c_0, the term for A_a(b - 1)."""
    case = classify(block, k)
    if case is NFClass.CASE_A:
        return ONE
    if case is NFClass.CASE_C:
        return Node(block.index, predecessor(block.arg, k, budget))
    b = _value(block.arg, k, budget, "argument of a b = penum head")
    value = ack_eval(a, k, b - 1, budget)
    if not isinstance(value, Value):
        raise Blowup(f"A_{a}({b - 1}) does not fit the digit budget")
    return normal_form(value.n, k)


def left_expansion(t: Term, k: int, budget: EvalBudget | None = None) -> LeftExpansion:
    """Unfold a head block A_a(b) with a >= 1 down through the levels.

    c_0 = A_a(b - 1) and c_i = A_{a-i}(A_{a-i}^{k-1}(c_{i-1}) - 1), each in
    normal form as written. The value of the head is k times the value of c_a.

    Raises:
        ZeroTerm: If t is ZERO
        NotApplicable: If the head index is 0
        Blowup: If a needed value or term exceeds the budget
    """
    check_base(k)
    budget = budget or EvalBudget.from_settings()
    block = _single_head(t)
    if isinstance(block.index, Zero):
        raise NotApplicable("left expansion needs a head index of at least 1")
    a = _value(block.index, k, budget, "head index")

    members = [_first_member(block, a, k, budget)]
    for i in range(1, a + 1):
        level = normal_form(a - i, k)
        inner = nest(level, members[-1], k - 1)
        members.append(Node(level, predecessor(inner, k, budget)))
    return LeftExpansion(head=block, k=k, c=tuple(members))


def _divide(block: Node, k: int, budget: EvalBudget) -> list[Block]:
    """A_0(b) - 1 = b * p + q for b = A_d(e) with d > 0."""
    b = _value(block.arg, k, budget, "exponent of a b = penum head")
    if power_exceeds_digits(k, b, budget.max_digits):
        logger.debug("division case blows up: k=%d, exponent has %d bits", k, b.bit_length())
        raise Blowup(f"k**b - 1 for k={k} has more than {budget.max_digits} digits")
    p, q = divmod(k**b - 1, b)
    divisor = block.arg
    assert isinstance(divisor, Node)
    return [Block(divisor.index, divisor.arg, p), *blocks(normal_form(q, k))]


def _check_size(size: int, budget: EvalBudget) -> None:
    if size > budget.max_term_size:
        raise Blowup(f"predecessor exceeds {budget.max_term_size} nodes")


def predecessor(t: Term, k: int, budget: EvalBudget | None = None) -> Term:
    """The base-k normal form of val(t) - 1, computed on terms.

    Args:
        t: A nonzero base-k normal term
        k: Base
        budget: Caps for the concrete division case and for the result size

    Returns:
        The normal form of the predecessor

    Raises:
        ZeroTerm: If t is ZERO
        Blowup: If the division case or the result size exceeds the budget

    Example:
        >>> print_term(predecessor(parse_term("A(A(0,0),0)"), 2))
        'A(0,A(0,0))+A(0,0)'
    """
    check_base(k)
    budget = budget or EvalBudget.from_settings()
    if isinstance(t, Zero):
        raise ZeroTerm("zero has no predecessor")

    items = list(blocks(t))
    last = items.pop()
    if last.coeff > 1:
        items.append(last._replace(coeff=last.coeff - 1))
    size = sum(term_size(Node(b.index, b.arg)) for b in items)

    current = Node(last.index, last.arg)
    while current != ONE:
        if isinstance(current.index, Zero) and classify(current, k) is NFClass.CASE_B:
            divided = _divide(current, k, budget)
            size += sum(term_size(Node(b.index, b.arg)) for b in divided)
            _check_size(size, budget)
            items.extend(divided)
            break
        if isinstance(current.index, Zero):
            lowered = Node(ZERO, predecessor(current.arg, k, budget))
        else:
            c = left_expansion(current, k, budget).last
            assert isinstance(c, Node)
            lowered = c
        items.append(Block(lowered.index, lowered.arg, k - 1))
        size += term_size(lowered)
        _check_size(size, budget)
        current = lowered

    return from_blocks(items)
