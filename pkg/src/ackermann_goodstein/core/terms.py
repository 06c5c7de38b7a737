"""Hereditary Ackermann terms.

A term is either ZERO or a Node standing for A_index(arg) * coeff + rest,
where index, arg and rest are terms again. Terms are immutable and hashable,
equality is structural, and subterms are shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Union


@dataclass(frozen=True, slots=True)
class Zero:
    """The empty sum, denoting 0."""

    def __repr__(self) -> str:
        return "ZERO"


ZERO = Zero()


@dataclass(frozen=True, slots=True, eq=False)
class Node:
    """A_index(arg) * coeff + rest.

    Hashes are computed once at construction and equality walks the rest
    chain in a loop, so long sums never recurse deeply.
    """

    index: Term
    arg: Term
    coeff: int = 1
    rest: Term = ZERO
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.coeff < 1:
            raise ValueError(f"coefficient must be at least 1, got {self.coeff}")
        object.__setattr__(self, "_hash", hash((self.index, self.arg, self.coeff, self.rest)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Node):
            return NotImplemented
        left: Term = self
        right: Term = other
        while isinstance(left, Node) and isinstance(right, Node):
            if left is right:
                return True
            if (
                left._hash != right._hash
                or left.coeff != right.coeff
                or left.index != right.index
                or left.arg != right.arg
            ):
                return False
            left, right = left.rest, right.rest
        return isinstance(left, Zero) and isinstance(right, Zero)


Term = Union[Zero, Node]

ONE = Node(ZERO, ZERO)


class Block(NamedTuple):
    """One summand A_index(arg) * coeff of a term."""

    index: Term
    arg: Term
    coeff: int


def blocks(t: Term) -> Iterator[Block]:
    """Yield the summands of t from the head down."""
    while isinstance(t, Node):
        yield Block(t.index, t.arg, t.coeff)
        t = t.rest


def from_blocks(items: Iterable[tuple[Term, Term, int]]) -> Term:
    """Build a term from head-first summands, merging equal neighbours."""
    merged: list[Block] = []
    for index, arg, coeff in items:
        if merged and merged[-1].index == index and merged[-1].arg == arg:
            merged[-1] = merged[-1]._replace(coeff=merged[-1].coeff + coeff)
        else:
            merged.append(Block(index, arg, coeff))
    result: Term = ZERO
    for block in reversed(merged):
        result = Node(block.index, block.arg, block.coeff, result)
    return result


def head(t: Term) -> Node:
    """The single-coefficient head block A_index(arg) of a nonzero term."""
    if not isinstance(t, Node):
        raise ValueError("zero has no head block")
    if t.coeff == 1 and isinstance(t.rest, Zero):
        return t
    return Node(t.index, t.arg)


def is_single_block(t: Term) -> bool:
    """Whether t is exactly A_index(arg), with coefficient 1 and no tail."""
    return isinstance(t, Node) and t.coeff == 1 and isinstance(t.rest, Zero)


def nest(index: Term, inner: Term, times: int) -> Term:
    """The formal iterate A_index^times(inner)."""
    for _ in range(times):
        inner = Node(index, inner)
    return inner


def term_size(t: Term) -> int:
    """Number of Node objects in t, counting shared subterms once per occurrence."""
    size = 0
    stack: list[Term] = [t]
    while stack:
        current = stack.pop()
        if isinstance(current, Node):
            size += 1
            stack.extend((current.index, current.arg, current.rest))
    return size


def term_norm(t: Term) -> int:
    """The symbol norm ||t||.

    ||0|| = 1 and ||A_p(s) + r|| = ||p|| + ||s|| + ||r||, where a coefficient p
    stands for p copies of the head block.

    Example:
        >>> term_norm(Node(ZERO, ZERO, 2))
        5
    """
    total = 1
    for block in blocks(t):
        total += block.coeff * (term_norm(block.index) + term_norm(block.arg))
    return total
