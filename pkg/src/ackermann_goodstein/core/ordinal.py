"""Ordinal notations below Gamma_0 in fixed-point-free Veblen normal form.

An ordinal term is ZERO or Phi(alpha, beta, coeff, rest), read as
phi_alpha(beta) * coeff + rest. In the fixed-point-free hierarchy every
alpha, beta yields a term strictly above both, so a term is in normal form
exactly when its sums are weakly descending.

This module also carries the base-omega image of Ackermann terms
(A_a(omega, b) := phi_a b), fundamental sequences, the iterated step-down
<n>, bounded checks of the k-step relation and the gamma_n sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Literal, NamedTuple, Union

from ackermann_goodstein.core.errors import InvalidTerm, ZeroHasNoFS
from ackermann_goodstein.core.terms import ZERO, Term, Zero, blocks
from ackermann_goodstein.core.types import Order
from ackermann_goodstein.logging import get_logger

logger = get_logger("core.ordinal")


@dataclass(frozen=True, slots=True, eq=False)
class Phi:
    """phi_alpha(beta) * coeff + rest."""

    alpha: OrdTerm
    beta: OrdTerm
    coeff: int = 1
    rest: OrdTerm = ZERO
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.coeff < 1:
            raise ValueError(f"coefficient must be at least 1, got {self.coeff}")
        object.__setattr__(self, "_hash", hash(("phi", self.alpha, self.beta, self.coeff, self.rest)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Phi):
            return NotImplemented
        left: OrdTerm = self
        right: OrdTerm = other
        while isinstance(left, Phi) and isinstance(right, Phi):
            if left is right:
                return True
            if (
                left._hash != right._hash
                or left.coeff != right.coeff
                or left.alpha != right.alpha
                or left.beta != right.beta
            ):
                return False
            left, right = left.rest, right.rest
        return isinstance(left, Zero) and isinstance(right, Zero)


OrdTerm = Union[Zero, Phi]

ORD_ONE = Phi(ZERO, ZERO)
OMEGA = Phi(ZERO, ORD_ONE)


class OBlock(NamedTuple):
    alpha: OrdTerm
    beta: OrdTerm
    coeff: int


def ord_blocks(t: OrdTerm) -> list[OBlock]:
    """Summands of t head first, with equal neighbours merged."""
    result: list[OBlock] = []
    while isinstance(t, Phi):
        if result and result[-1].alpha == t.alpha and result[-1].beta == t.beta:
            result[-1] = result[-1]._replace(coeff=result[-1].coeff + t.coeff)
        else:
            result.append(OBlock(t.alpha, t.beta, t.coeff))
        t = t.rest
    return result


def ord_from_blocks(items: list[OBlock]) -> OrdTerm:
    result: OrdTerm = ZERO
    for alpha, beta, coeff in reversed(items):
        if isinstance(result, Phi) and result.alpha == alpha and result.beta == beta:
            result = Phi(alpha, beta, coeff + result.coeff, result.rest)
        else:
            result = Phi(alpha, beta, coeff, result)
    return result


def ord_canonical(t: OrdTerm) -> OrdTerm:
    """Merge adjacent equal summands into coefficients."""
    return ord_from_blocks(ord_blocks(t))


def ord_from_int(n: int) -> OrdTerm:
    """The finite ordinal n as phi_0(0) * n."""
    return Phi(ZERO, ZERO, n) if n > 0 else ZERO


# Comparison


@lru_cache(maxsize=1 << 16)
def _cmp_block(a1: OrdTerm, b1: OrdTerm, a2: OrdTerm, b2: OrdTerm) -> Order:
    by_index = _cmp(a1, a2)
    if by_index is Order.EQ:
        return _cmp(b1, b2)
    if by_index is Order.LT:
        return Order.LT if _cmp(b1, Phi(a2, b2)) is Order.LT else Order.GT
    return Order.LT if _cmp(Phi(a1, b1), b2) is not Order.GT else Order.GT


def _cmp(x: OrdTerm, y: OrdTerm) -> Order:
    if x is y:
        return Order.EQ
    xs, ys = ord_blocks(x), ord_blocks(y)
    for left, right in zip(xs, ys):
        by_block = _cmp_block(left.alpha, left.beta, right.alpha, right.beta)
        if by_block is not Order.EQ:
            return by_block
        if left.coeff != right.coeff:
            return Order.of(left.coeff, right.coeff)
    return Order.of(len(xs), len(ys))


@lru_cache(maxsize=1 << 14)
def ord_validate(xi: OrdTerm) -> bool:
    """Whether xi is in Veblen normal form.

    Every subterm must be valid, every block must lie strictly above its
    alpha and beta, and sums must be weakly descending.

    Example:
        >>> ord_validate(Phi(ZERO, ZERO, 1, Phi(Phi(ZERO, ZERO), ZERO)))
        False
    """
    previous: Phi | None = None
    current: OrdTerm = xi
    while isinstance(current, Phi):
        if not (ord_validate(current.alpha) and ord_validate(current.beta)):
            return False
        single = Phi(current.alpha, current.beta)
        if _cmp(current.alpha, single) is not Order.LT or _cmp(current.beta, single) is not Order.LT:
            return False
        if previous is not None and _cmp_block(
            previous.alpha, previous.beta, current.alpha, current.beta
        ) is Order.LT:
            return False
        previous = current
        current = current.rest
    return True


def _require_valid(*terms: OrdTerm) -> None:
    for t in terms:
        if not ord_validate(t):
            from ackermann_goodstein.core.grammar import print_ordinal

            raise InvalidTerm(f"not in Veblen normal form: {print_ordinal(t)}")


def ord_compare(xi: OrdTerm, zeta: OrdTerm) -> Order:
    """Compare two ordinal terms.

    Raises:
        InvalidTerm: If either term fails ord_validate
    """
    _require_valid(xi, zeta)
    return _cmp(xi, zeta)


def ord_order(xi: OrdTerm, zeta: OrdTerm) -> Order:
    """Compare terms already known to be valid, skipping validation."""
    return _cmp(xi, zeta)


# Structure


def is_successor(t: OrdTerm) -> bool:
    """A term is a successor iff its trailing summand is phi_0(0) = 1."""
    items = ord_blocks(t)
    return bool(items) and items[-1].alpha == ZERO and items[-1].beta == ZERO


def ord_predecessor(t: OrdTerm) -> OrdTerm:
    """beta for a successor beta + 1."""
    if not is_successor(t):
        raise ValueError("not a successor ordinal")
    items = ord_blocks(t)
    last = items.pop()
    if last.coeff > 1:
        items.append(last._replace(coeff=last.coeff - 1))
    return ord_from_blocks(items)


def _in_fix(alpha: OrdTerm, lam: OrdTerm) -> bool:
    return (
        isinstance(lam, Phi)
        and lam.coeff == 1
        and isinstance(lam.rest, Zero)
        and _cmp(lam.alpha, alpha) is Order.GT
    )


def in_fix(alpha: OrdTerm, lam: OrdTerm) -> bool:
    """Whether lam is a fixed point of phi_alpha, i.e. a single phi_beta(gamma) with beta > alpha.

    Raises:
        InvalidTerm: If either term fails ord_validate
    """
    _require_valid(alpha, lam)
    return _in_fix(alpha, lam)


# Fundamental sequences


def _iterate(index: OrdTerm, start: OrdTerm, times: int) -> OrdTerm:
    for _ in range(times):
        start = Phi(index, start)
    return start


def _times(lam: Phi, x: int) -> OrdTerm:
    return Phi(lam.alpha, lam.beta, x) if x > 0 else ZERO


def _fs_single(alpha: OrdTerm, beta: OrdTerm, x: int) -> OrdTerm:
    if isinstance(alpha, Zero):
        if isinstance(beta, Zero):
            return ZERO
        if _in_fix(ZERO, beta):
            assert isinstance(beta, Phi)
            return _times(beta, x)
        if is_successor(beta):
            # [x] phi_0(beta + 1) = phi_0(beta) * x
            return _times(Phi(ZERO, ord_predecessor(beta)), x)
        return Phi(ZERO, _fs(beta, x))

    hat = x if is_successor(alpha) else 1
    lower = _fs(alpha, x)
    if isinstance(beta, Zero):
        return _iterate(lower, ORD_ONE, hat)
    if is_successor(beta):
        return _iterate(lower, Phi(alpha, ord_predecessor(beta)), hat)
    if _in_fix(alpha, beta):
        return _iterate(lower, beta, hat)
    return Phi(alpha, _fs(beta, x))


@lru_cache(maxsize=1 << 14)
def _fs(xi: OrdTerm, x: int) -> OrdTerm:
    if isinstance(xi, Zero):
        raise ZeroHasNoFS()
    items = ord_blocks(xi)
    last = items.pop()
    if last.coeff > 1:
        items.append(last._replace(coeff=last.coeff - 1))
    tail = ord_blocks(_fs_single(last.alpha, last.beta, x))
    return ord_from_blocks(items + tail)


def fund_seq(xi: OrdTerm, x: int) -> OrdTerm:
    """The x-th member [x]xi of the fundamental sequence of xi.

    Args:
        xi: A valid nonzero term
        x: Sequence position (x >= 0)

    Returns:
        A valid term strictly below xi

    Raises:
        ZeroHasNoFS: If xi is zero
        InvalidTerm: If xi fails ord_validate

    Example:
        >>> fund_seq(Phi(ORD_ONE, ZERO), 2) == Phi(ZERO, Phi(ZERO, Phi(ZERO, ZERO)))
        True
    """
    if x < 0:
        raise ValueError(f"fundamental sequence index must be a natural number, got {x}")
    if isinstance(xi, Zero):
        raise ZeroHasNoFS()
    _require_valid(xi)
    return _fs(xi, x)


# Step-down and the k-step relation


@dataclass(frozen=True)
class ReachedZero:
    """The step-down reached 0 at <at>."""

    at: int


class BudgetExceeded(Enum):
    BUDGET_EXCEEDED = "budget_exceeded"

    def __repr__(self) -> str:
        return "BUDGET_EXCEEDED"


BUDGET_EXCEEDED = BudgetExceeded.BUDGET_EXCEEDED

StepdownOutcome = Union[ReachedZero, Literal[BudgetExceeded.BUDGET_EXCEEDED]]


@dataclass(frozen=True)
class StepdownReport:
    """The chain <2>xi, <3>xi, ... until zero or the step cap."""

    start: OrdTerm
    steps: tuple[tuple[int, OrdTerm], ...] = field(default_factory=tuple)
    outcome: StepdownOutcome = BUDGET_EXCEEDED

    def value_at(self, n: int) -> OrdTerm | None:
        """<n>start if the report covers it (<1> is the identity)."""
        if n <= 1:
            return self.start
        for index, term in self.steps:
            if index == n:
                return term
        if isinstance(self.outcome, ReachedZero) and n >= self.outcome.at:
            return ZERO
        return None


def stepdown(xi: OrdTerm, max_steps: int) -> StepdownReport:
    """Iterate <n>xi for n = 2, 3, ... until zero or max_steps steps.

    Raises:
        InvalidTerm: If xi fails ord_validate
    """
    _require_valid(xi)
    if isinstance(xi, Zero):
        return StepdownReport(xi, (), ReachedZero(1))
    steps: list[tuple[int, OrdTerm]] = []
    current: OrdTerm = xi
    n = 2
    for _ in range(max_steps):
        current = _fs(current, n)
        steps.append((n, current))
        if isinstance(current, Zero):
            return StepdownReport(xi, tuple(steps), ReachedZero(n))
        n += 1
    logger.debug("stepdown stopped after %d steps", max_steps)
    return StepdownReport(xi, tuple(steps), BUDGET_EXCEEDED)


class Preceq(Enum):
    """Outcome of a bounded k-step relation check."""

    HOLDS = "holds"
    FAILS = "fails"
    BUDGET_EXCEEDED = "budget_exceeded"


def preceq_chain(
    alpha: OrdTerm, beta: OrdTerm, k: int, max_steps: int
) -> tuple[Preceq, list[OrdTerm]]:
    """Walk beta, [k]beta, [k][k]beta, ... looking for alpha.

    [k] is a function, so the chain below beta is unique: reaching alpha
    certifies alpha <=_k beta and dropping below alpha refutes it.

    Returns:
        The verdict and the chain walked, starting with beta
    """
    _require_valid(alpha, beta)
    chain: list[OrdTerm] = [beta]
    current = beta
    for _ in range(max_steps + 1):
        order = _cmp(current, alpha)
        if order is Order.EQ:
            return Preceq.HOLDS, chain
        if order is Order.LT:
            return Preceq.FAILS, chain
        current = _fs(current, k)
        chain.append(current)
    return Preceq.BUDGET_EXCEEDED, chain


def preceq_k_bounded(alpha: OrdTerm, beta: OrdTerm, k: int, max_steps: int) -> Preceq:
    """Bounded check of alpha <=_k beta."""
    verdict, _ = preceq_chain(alpha, beta, k, max_steps)
    return verdict


# Base omega and gamma_n


@lru_cache(maxsize=1 << 16)
def to_ordinal(t: Term) -> OrdTerm:
    """Base change to omega: A_a(b) * p + c maps to phi_a'(b') * p + c'.

    Example:
        >>> to_ordinal(Node(Node(ZERO, ZERO), ZERO)) == Phi(ORD_ONE, ZERO)
        True
    """
    return ord_from_blocks(
        [OBlock(to_ordinal(b.index), to_ordinal(b.arg), b.coeff) for b in blocks(t)]
    )


def gamma(n: int) -> OrdTerm:
    """gamma_0 = 0 and gamma_{n+1} = phi_{gamma_n}(0)."""
    result: OrdTerm = ZERO
    for _ in range(n):
        result = Phi(result, ZERO)
    return result


def ord_norm(t: OrdTerm) -> int:
    """Symbol norm of an ordinal term, same recursion as term_norm."""
    total = 1
    for block in ord_blocks(t):
        total += block.coeff * (ord_norm(block.alpha) + ord_norm(block.beta))
    return total
