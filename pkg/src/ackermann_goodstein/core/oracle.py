"""Brute-force reference implementations for cross-checking.

Everything here is deliberately naive: Ackermann values are unfolded from
the recursion with no cache, searches are linear scans and nothing is merged
into coefficients. Only the results are shared with normal_form, never the
code paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ackermann_goodstein.core.ackermann import iterate_compare
from ackermann_goodstein.core.errors import BaseTooSmall, OracleOverflow, ZeroInput
from ackermann_goodstein.core.normal_form import SandwichSeq, SandwichStep
from ackermann_goodstein.core.types import Order, power_exceeds_digits

ORACLE_MAX_DIGITS = 1_000_000


def _check(k: int) -> None:
    if k < 2:
        raise BaseTooSmall(k)


def naive_ack(a: int, k: int, b: int, max_digits: int = ORACLE_MAX_DIGITS) -> int:
    """A_a(k, b) straight from the recursion; b = -1 gives 1.

    Raises:
        OracleOverflow: If a power would exceed max_digits decimal digits
    """
    _check(k)
    if b == -1:
        return 1
    if a == 0:
        if power_exceeds_digits(k, b, max_digits):
            raise OracleOverflow(f"{k}**{b} exceeds {max_digits} digits")
        return k**b
    value = 1
    for _ in range(b + 1):
        for _ in range(k):
            value = naive_ack(a - 1, k, value, max_digits)
    return value


def naive_ack_at_most(a: int, k: int, b: int, ceiling: int) -> Optional[int]:
    """A_a(k, b) if it is at most ceiling, else None."""
    if b == -1:
        return 1 if ceiling >= 1 else None
    if b > ceiling:
        return None
    if a == 0:
        if b >= ceiling.bit_length():
            return None
        power = k**b
        return power if power <= ceiling else None
    value: Optional[int] = 1
    for _ in range(b + 1):
        for _ in range(k):
            assert value is not None
            value = naive_ack_at_most(a - 1, k, value, ceiling)
            if value is None:
                return None
    return value


def oracle_sandwich(m: int, k: int) -> SandwichSeq:
    """The sandwiching sequence of m by exhaustive linear search.

    Example:
        >>> [tuple(s) for s in oracle_sandwich(16, 2)]
        [(1, 0, 4), (0, 4, 16)]
    """
    _check(k)
    if m <= 0:
        raise ZeroInput("the oracle sandwich needs m >= 1")
    steps = []
    previous = 0
    while naive_ack_at_most(0, k, previous, m) is not None:
        a = 0
        while naive_ack_at_most(a + 1, k, previous, m) is not None:
            a += 1
        b = previous
        while naive_ack_at_most(a, k, b + 1, m) is not None:
            b += 1
        value = naive_ack_at_most(a, k, b, m)
        assert value is not None
        steps.append(SandwichStep(a, b, value))
        previous = value
    return SandwichSeq(m=m, k=k, steps=tuple(steps))


def oracle_base_change(n: int, k: int, ell: int, max_digits: int = ORACLE_MAX_DIGITS) -> int:
    """<n>(k -> ell) by integer recursion over oracle sandwiches."""
    if n == 0:
        return 0
    last = oracle_sandwich(n, k).last
    a = oracle_base_change(last.index, k, ell, max_digits)
    b = oracle_base_change(last.arg, k, ell, max_digits)
    return naive_ack(a, ell, b, max_digits) + oracle_base_change(
        n - last.value, k, ell, max_digits
    )


def oracle_goodstein_step(n: int, k: int, max_digits: int = ORACLE_MAX_DIGITS) -> int:
    """<n>(k -> k+1) - 1.

    Raises:
        ZeroInput: If n == 0
        OracleOverflow: If an intermediate value exceeds max_digits

    Example:
        >>> oracle_goodstein_step(4, 2) == 3**27 - 1
        True
    """
    _check(k)
    if n == 0:
        raise ZeroInput("zero has no Goodstein successor")
    return oracle_base_change(n, k, k + 1, max_digits) - 1


@dataclass(frozen=True)
class AltNF:
    """m = A_a(k, b) + c with A_{a0}(k, b0) the largest Ackermann value <= m.

    a is the largest index reaching that value for some b.
    """

    a0: int
    b0: int
    a: int
    b: int
    c: int


def alt_normal_form(m: int, k: int) -> AltNF:
    """The maximal-value-then-maximal-index representation of m.

    Example:
        >>> alt_normal_form(5, 2)
        AltNF(a0=1, b0=0, a=1, b=0, c=1)
    """
    _check(k)
    if m <= 0:
        raise ZeroInput("the alternative normal form needs m >= 1")
    best = (0, 0, 1)
    a = 0
    while naive_ack_at_most(a, k, 0, m) is not None:
        b = 0
        while naive_ack_at_most(a, k, b + 1, m) is not None:
            b += 1
        value = naive_ack_at_most(a, k, b, m)
        assert value is not None
        if value >= best[2]:
            best = (a, b, value)
        a += 1
    index, arg, value = best
    return AltNF(a0=index, b0=arg, a=index, b=arg, c=m - value)


def separation_check(j: int, k: int = 2) -> bool:
    """Whether A_1^j(k, 2) avoids every value A_2(k, d).

    A_2(k, d) = A_1^{k(d+1)}(k, 1), so each candidate d is compared with
    A_1^j(k, 2) by stripping common applications of the injective A_1.
    Candidates stop once A_2(k, d) passes A_1^j(k, 2).
    """
    _check(k)
    if j < 0:
        raise ValueError(f"iteration count must be a natural number, got {j}")
    d = 0
    while True:
        order = iterate_compare(1, k, k * (d + 1), 1, j, 2)
        if order is Order.EQ:
            return False
        if order is Order.GT:
            return True
        d += 1
