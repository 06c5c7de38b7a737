"""Sandwiching sequences, hereditary k-normal forms and their checks.

For m >= 1 and base k >= 2 the sandwiching sequence starts at m_0 = 0 and
keeps adding steps (a_{i+1}, b_{i+1}, m_{i+1}) while A_0(k, m_i) <= m:

    a_{i+1} = the largest a with A_a(k, m_i) <= m
    b_{i+1} = the largest b with A_{a_{i+1}}(k, b) <= m
    m_{i+1} = A_{a_{i+1}}(k, b_{i+1})

The last step gives m = A_{a_n}(b_n) + c, and normalizing a_n, b_n and c
recursively yields the hereditary normal form. Repeated head blocks are
merged into a coefficient.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator, Literal, NamedTuple, Optional, Union

from ackermann_goodstein.core.ackermann import (
    ack_cmp_threshold,
    ack_eval,
    ack_exceeds,
    check_base,
)
from ackermann_goodstein.core.errors import BadBases, ZeroInput, ZeroTerm
from ackermann_goodstein.core.ordinal import OrdTerm, ord_order, to_ordinal
from ackermann_goodstein.core.terms import (
    Node,
    Term,
    Zero,
    blocks,
    from_blocks,
    head,
)
from ackermann_goodstein.core.types import (
    EXCEEDED,
    BoundedNat,
    EvalBudget,
    Exceeded,
    LeqWith,
    Order,
    Value,
    decimal_digits,
    exceeds_digits,
)
from ackermann_goodstein.logging import get_logger

logger = get_logger("core.normal_form")


# Sandwiching


class SandwichStep(NamedTuple):
    """One sandwiching step: value = A_index(k, arg)."""

    index: int
    arg: int
    value: int


@dataclass(frozen=True)
class SandwichSeq:
    """The k-sandwiching sequence of m."""

    m: int
    k: int
    steps: tuple[SandwichStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[SandwichStep]:
        return iter(self.steps)

    @property
    def last(self) -> SandwichStep:
        return self.steps[-1]

    @property
    def values(self) -> tuple[int, ...]:
        """m_0 = 0, m_1, ..., m_n."""
        return (0, *(step.value for step in self.steps))

    @property
    def penum(self) -> int:
        """The second-to-last value m_{n-1} (0 when n <= 1)."""
        return self.steps[-2].value if len(self.steps) >= 2 else 0


def _fits(a: int, k: int, b: int, m: int) -> Optional[int]:
    """A_a(k, b) when it is at most m, else None."""
    result = ack_cmp_threshold(a, k, b, m)
    return result.value if isinstance(result, LeqWith) else None


def _floor_log(m: int, k: int) -> int:
    """The largest b with k**b <= m, for m >= 1."""
    b = int(math.log(m, k))
    while k ** (b + 1) <= m:
        b += 1
    while k**b > m:
        b -= 1
    return b


def _largest_arg(a: int, k: int, low: int, m: int) -> int:
    """The largest b >= low with A_a(k, b) <= m, given A_a(k, low) <= m."""
    if a == 0:
        return max(low, _floor_log(m, k))
    # Gallop to a failing bound, then bisect; A_a grows so fast that hi stays tiny
    step = 1
    hi = low + step
    while _fits(a, k, hi, m) is not None:
        low = hi
        step *= 2
        hi = low + step
    while hi - low > 1:
        mid = (low + hi) // 2
        if _fits(a, k, mid, m) is not None:
            low = mid
        else:
            hi = mid
    return low


def sandwich(m: int, k: int) -> SandwichSeq:
    """Compute the k-sandwiching sequence of m.

    Args:
        m: A positive natural number
        k: Base (at least 2)

    Returns:
        The unique sandwiching sequence; its last step is the normal form head

    Raises:
        ZeroInput: If m == 0
        BaseTooSmall: If k < 2

    Example:
        >>> sandwich(21, 2).steps
        (SandwichStep(index=1, arg=0, value=4), SandwichStep(index=0, arg=4, value=16))
    """
    check_base(k)
    if m < 0:
        raise ValueError(f"expected a natural number, got {m}")
    if m == 0:
        raise ZeroInput("0 has the empty sandwiching sequence")

    steps: list[SandwichStep] = []
    previous = 0
    while _fits(0, k, previous, m) is not None:
        index = 0
        while _fits(index + 1, k, previous, m) is not None:
            index += 1
        arg = _largest_arg(index, k, previous, m)
        value = _fits(index, k, arg, m)
        assert value is not None
        steps.append(SandwichStep(index, arg, value))
        previous = value
    return SandwichSeq(m=m, k=k, steps=tuple(steps))


# Normal forms


def _compute_normal_form(m: int, k: int) -> Term:
    items: list[tuple[Term, Term, int]] = []
    while m > 0:
        last = sandwich(m, k).last
        items.append((normal_form(last.index, k), normal_form(last.arg, k), 1))
        m -= last.value
    return from_blocks(items)


_nf_cached: Optional[Callable[[int, int], Term]] = None
_nf_lock = threading.Lock()


def _cached_normal_form() -> Callable[[int, int], Term]:
    global _nf_cached
    if _nf_cached is None:
        with _nf_lock:
            if _nf_cached is None:
                from ackermann_goodstein.config import get_settings

                _nf_cached = lru_cache(maxsize=get_settings().nf_cache_size)(
                    _compute_normal_form
                )
    return _nf_cached


def normal_form(m: int, k: int) -> Term:
    """The hereditary base-k normal form of m.

    Raises:
        BaseTooSmall: If k < 2

    Example:
        >>> from ackermann_goodstein.core.grammar import print_term
        >>> print_term(normal_form(21, 2))
        'A(0,A(A(0,0),0))+A(A(0,0),0)+A(0,0)'
    """
    check_base(k)
    if m < 0:
        raise ValueError(f"expected a natural number, got {m}")
    return _cached_normal_form()(m, k)


def omega_image(m: int, k: int) -> OrdTerm:
    """Base change of m from k to omega."""
    return to_ordinal(normal_form(m, k))


# Evaluation


class _TooLarge(Exception):
    pass


def _eval(t: Term, k: int, budget: EvalBudget) -> int:
    total = 0
    for block in blocks(t):
        a = _eval(block.index, k, budget)
        b = _eval(block.arg, k, budget)
        value = ack_eval(a, k, b, budget)
        if not isinstance(value, Value):
            raise _TooLarge
        total += value.n * block.coeff
        if exceeds_digits(total, budget.max_digits):
            raise _TooLarge
    return total


def eval_term(t: Term, k: int, budget: EvalBudget | None = None) -> BoundedNat:
    """The value of t read in base k, or EXCEEDED.

    Raises:
        BaseTooSmall: If k < 2

    Example:
        >>> eval_term(Node(Node(ZERO, ZERO), Node(ZERO, ZERO), 1, ONE), 2)
        Value(n=65537)
    """
    check_base(k)
    budget = budget or EvalBudget.from_settings()
    try:
        return Value(_eval(t, k, budget))
    except _TooLarge:
        return EXCEEDED


def concrete(t: Term, k: int, budget: EvalBudget) -> Optional[int]:
    """The value of t when it fits the budget, else None."""
    value = eval_term(t, k, budget)
    return value.n if isinstance(value, Value) else None


def term_compare(x: Term, y: Term) -> Order:
    """Compare two normal terms (of one base) by value via their base-omega images."""
    if x == y:
        return Order.EQ
    return ord_order(to_ordinal(x), to_ordinal(y))


def base_change(t: Term, k: int, ell: int) -> Term:
    """Replace base k by ell throughout t.

    Terms carry no base of their own: A_a(b) * p + c keeps its shape and only
    the base used to read it changes. The map is the identity on syntax and
    the new meaning shows up through eval_term(t, ell).

    Raises:
        BaseTooSmall: If k < 2
        BadBases: If ell <= k
    """
    check_base(k)
    if ell <= k:
        raise BadBases(k, ell)
    return t


def base_change_value(m: int, k: int, ell: int, budget: EvalBudget | None = None) -> BoundedNat:
    """The number <m>(k -> ell)."""
    return eval_term(base_change(normal_form(m, k), k, ell), ell, budget)


# Symbolic sandwiching and classification


class SymbolicStep(NamedTuple):
    """A sandwiching step kept as terms: value = A_index(arg)."""

    index: Term
    arg: Term

    @property
    def block(self) -> Node:
        return Node(self.index, self.arg)


def _compute_term_sandwich(t: Term) -> tuple[SymbolicStep, ...]:
    if isinstance(t, Zero):
        return ()
    inner = term_sandwich(t.arg)
    kept = tuple(step for step in inner if term_compare(step.index, t.index) is Order.GT)
    return (*kept, SymbolicStep(t.index, t.arg))


_term_sandwich_cached: Optional[Callable[[Term], tuple[SymbolicStep, ...]]] = None


def term_sandwich(t: Term) -> tuple[SymbolicStep, ...]:
    """The sandwiching steps of the head value of a normal term, as terms.

    The steps of A_a(b) are the steps of b whose index exceeds a, then (a, b).
    Results share the normal form cache size from settings.
    """
    global _term_sandwich_cached
    if _term_sandwich_cached is None:
        with _nf_lock:
            if _term_sandwich_cached is None:
                from ackermann_goodstein.config import get_settings

                _term_sandwich_cached = lru_cache(maxsize=get_settings().nf_cache_size)(
                    _compute_term_sandwich
                )
    return _term_sandwich_cached(t)


class NFClass(Enum):
    """Case split on the head block A_a(b) of a normal form."""

    CASE_A = "A"  # b = 0
    CASE_B = "B"  # b = penum > 0
    CASE_C = "C"  # b > penum


def classify(t: Term, k: int) -> NFClass:
    """Classify the head block of a normal term.

    Raises:
        ZeroTerm: If t is ZERO
        BaseTooSmall: If k < 2
    """
    check_base(k)
    if isinstance(t, Zero):
        raise ZeroTerm("zero has no head block to classify")
    block = head(t)
    if isinstance(block.arg, Zero):
        return NFClass.CASE_A
    steps = term_sandwich(block)
    if len(steps) >= 2 and steps[-2].block == block.arg:
        return NFClass.CASE_B
    return NFClass.CASE_C


# Validation


class Valid(Enum):
    VALID = "valid"

    def __repr__(self) -> str:
        return "VALID"


VALID = Valid.VALID


@dataclass(frozen=True)
class Invalid:
    """The term is not in base-k normal form."""

    reason: str


ValidationResult = Union[Literal[Valid.VALID], Invalid, Literal[Exceeded.EXCEEDED]]

# True, False, or undecided within the budget
Verdict = Union[bool, Literal[Exceeded.EXCEEDED]]


def _describe(t: Term) -> str:
    from ackermann_goodstein.core.grammar import print_term

    return print_term(t)


def _show(n: int) -> str:
    if n.bit_length() < 4096:
        return str(n)
    return f"<{decimal_digits(n)} digits>"


def is_normal_block(index: Term, arg: Term, k: int, budget: EvalBudget | None = None) -> Verdict:
    """Whether A_index(arg) is in base-k normal form, for normal index and arg.

    With J the last step of arg's sandwich whose index exceeds a, the block is
    normal iff A_a(b) < A_{a+1}(m_J) and, when such a step exists,
    A_a(b) < A_{d_J}(e_J + 1). Both sides are decided by peeling against
    the concrete b, never by evaluating A_a(b).
    """
    check_base(k)
    budget = budget or EvalBudget.from_settings()
    block = Node(index, arg)
    value = concrete(block, k, budget)
    if value is not None:
        return normal_form(value, k) == block
    if isinstance(arg, Zero):
        return True
    a = concrete(index, k, budget)
    if a is None:
        return EXCEEDED
    if term_compare(arg.index, index) is Order.GT:
        return True
    b = concrete(arg, k, budget)
    if b is None:
        return EXCEEDED

    above = [step for step in sandwich(b, k) if step.index > a]
    floor = above[-1].value if above else 0
    if not ack_exceeds(a + 1, floor, a, b, k):
        return False
    if above and not ack_exceeds(above[-1].index, above[-1].arg + 1, a, b, k):
        return False
    return True


def is_extended_normal(
    index: Term,
    arg: Term,
    coeff: int,
    tail: Term,
    k: int,
    budget: EvalBudget | None = None,
) -> Verdict:
    """Whether A_a(b) * p + q is in extended normal form, given normal parts.

    Requires a normal block, q < A_a(b) and A_a(b) * p + q below
    min{A_a(b + 1), A_0(A_a(b))}. For a = 0 the last bound reads p < k.
    """
    check_base(k)
    budget = budget or EvalBudget.from_settings()
    block_ok = is_normal_block(index, arg, k, budget)
    if block_ok is not True:
        return block_ok
    block = Node(index, arg)
    if term_compare(tail, block) is not Order.LT:
        return False
    if isinstance(index, Zero):
        return coeff < k

    x = concrete(block, k, budget)
    if x is None:
        # k**x dwarfs any coefficient that fits in memory
        return True
    q = concrete(tail, k, budget)
    if q is None:
        return EXCEEDED
    total = x * coeff + q
    if x >= total.bit_length():
        return True
    return total < k**x


def _suffixes(t: Term) -> list[Node]:
    nodes = []
    while isinstance(t, Node):
        nodes.append(t)
        t = t.rest
    return nodes


def _validate(t: Term, k: int, budget: EvalBudget) -> ValidationResult:
    for node in reversed(_suffixes(t)):
        value = concrete(node, k, budget)
        if value is not None:
            expected = normal_form(value, k)
            if expected != node:
                return Invalid(f"value {_show(value)} has normal form {_describe(expected)}")
            continue
        for part in (node.index, node.arg):
            verdict = _validate(part, k, budget)
            if verdict is not VALID:
                return verdict
        extended = is_extended_normal(node.index, node.arg, node.coeff, node.rest, k, budget)
        if extended is EXCEEDED:
            return EXCEEDED
        if not extended:
            block = _describe(Node(node.index, node.arg, node.coeff))
            return Invalid(f"block {block} is not normal here")
    return VALID


def validate_nf(t: Term, k: int, budget: EvalBudget | None = None) -> ValidationResult:
    """Check that t is exactly the base-k normal form of its value.

    Suffixes whose value fits the budget are compared against normal_form
    directly. Larger blocks are checked symbolically with is_extended_normal.

    Returns:
        VALID, Invalid(reason), or EXCEEDED when the budget cannot decide

    Raises:
        BaseTooSmall: If k < 2

    Example:
        >>> validate_nf(Node(ZERO, ZERO, 2), 2)
        Invalid(reason='value 2 has normal form A(0,A(0,0))')
    """
    check_base(k)
    budget = budget or EvalBudget.from_settings()
    result = _validate(t, k, budget)
    if result is EXCEEDED:
        logger.debug("validation of %s undecided within budget", _describe(t))
    return result

