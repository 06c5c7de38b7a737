"""Budgeted evaluation of the base-parametrized Ackermann hierarchy.

    A_a(k, -1) = 1
    A_0(k, b)  = k ** b
    A_{a+1}(k, b) = A_a^k(A_{a+1}(k, b - 1))

Values are exact Python integers. Every evaluation runs under a limit: a
digit cap (ack_eval, ack_iter) or a value ceiling (ack_cmp_threshold), plus a
cap on fresh unfoldings. Exact values are shared through a thread-safe LRU
cache keyed on (a, k, b), which never changes results.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional

from ackermann_goodstein.core.errors import BaseTooSmall, IterZeroOnSentinel
from ackermann_goodstein.core.types import (
    EXCEEDED,
    GREATER,
    MINUS_ONE,
    Arg,
    BoundedNat,
    EvalBudget,
    LeqWith,
    Order,
    ThresholdResult,
    Value,
    exceeds_digits,
    power_exceeds_digits,
)
from ackermann_goodstein.logging import get_logger

logger = get_logger("core.ackermann")


class _Overflow(Exception):
    """Internal signal: the current limit was hit."""


class AckermannCache:
    """Thread-safe LRU map from (a, k, b) to exact values A_a(k, b)."""

    def __init__(self, maxsize: int) -> None:
        self.maxsize = maxsize
        self._data: OrderedDict[tuple[int, int, int], int] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: tuple[int, int, int]) -> Optional[int]:
        with self._lock:
            value = self._data.get(key)
            if value is None:
                self.misses += 1
                return None
            self._data.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key: tuple[int, int, int], value: int) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        return len(self._data)


_cache: Optional[AckermannCache] = None
_cache_lock = threading.Lock()


def get_cache() -> AckermannCache:
    """Get the shared value cache, sized from settings on first use."""
    global _cache
    if _cache is None:
        with _cache_lock:
            if _cache is None:
                from ackermann_goodstein.config import get_settings

                _cache = AckermannCache(get_settings().memo_size)
    return _cache


@dataclass
class _Limit:
    """Mutable per-evaluation limit state."""

    max_value: Optional[int] = None
    max_digits: Optional[int] = None
    max_calls: Optional[int] = None
    calls: int = 0

    def charge(self) -> None:
        self.calls += 1
        if self.max_calls is not None and self.calls > self.max_calls:
            raise _Overflow

    def check(self, value: int) -> None:
        if self.max_value is not None and value > self.max_value:
            raise _Overflow
        if self.max_digits is not None and exceeds_digits(value, self.max_digits):
            raise _Overflow

    def check_power(self, k: int, b: int) -> None:
        """Reject k**b before computing it when a lower bound already fails."""
        if self.max_value is not None and b * (k.bit_length() - 1) > self.max_value.bit_length():
            raise _Overflow
        if self.max_digits is not None and power_exceeds_digits(k, b, self.max_digits):
            raise _Overflow


def check_base(k: int) -> None:
    """Raise BaseTooSmall unless k >= 2."""
    if k < 2:
        raise BaseTooSmall(k)


def _check_args(a: int, b: Arg) -> None:
    if a < 0:
        raise ValueError(f"Ackermann index must be a natural number, got {a}")
    if b is not MINUS_ONE and b < 0:
        raise ValueError(f"use MINUS_ONE for the auxiliary argument, got {b}")


def _ack(a: int, k: int, b: Arg, limit: _Limit) -> int:
    if b is MINUS_ONE:
        return 1
    # max{a, b} < A_a(k, b)
    if limit.max_value is not None and max(a, b) >= limit.max_value:
        raise _Overflow

    if a == 0:
        limit.check_power(k, b)
        limit.charge()
        value: int = k**b
        limit.check(value)
        return value

    cache = get_cache()
    cached = cache.get((a, k, b))
    if cached is not None:
        limit.check(cached)
        return cached

    # Unfold upward from A_a(-1) = 1; monotonicity ends the loop early on overflow
    value = 1
    j = 0
    while j <= b:
        hit = cache.get((a, k, j))
        if hit is None:
            limit.charge()
            for _ in range(k):
                value = _ack(a - 1, k, value, limit)
            cache.put((a, k, j), value)
        else:
            value = hit
        limit.check(value)
        j += 1
    return value


def ack_eval(a: int, k: int, b: Arg, budget: EvalBudget | None = None) -> BoundedNat:
    """Evaluate A_a(k, b) exactly, or report that it exceeds the budget.

    Args:
        a: Level index
        k: Base (at least 2)
        b: Argument, or MINUS_ONE
        budget: Digit and call caps (defaults from settings)

    Returns:
        Value(A_a(k, b)) when every intermediate fits, EXCEEDED otherwise

    Raises:
        BaseTooSmall: If k < 2

    Example:
        >>> ack_eval(1, 2, 1)
        Value(n=65536)
    """
    check_base(k)
    _check_args(a, b)
    budget = budget or EvalBudget.from_settings()
    limit = _Limit(max_digits=budget.max_digits, max_calls=budget.max_calls)
    try:
        return Value(_ack(a, k, b, limit))
    except _Overflow:
        logger.debug("A_%d(%d, %s) exceeds budget after %d unfoldings", a, k, b, limit.calls)
        return EXCEEDED


def ack_cmp_threshold(a: int, k: int, b: Arg, t: int) -> ThresholdResult:
    """Decide whether A_a(k, b) <= t without materializing larger values.

    Returns:
        LeqWith(A_a(k, b)) if the value is at most t, GREATER otherwise

    Raises:
        BaseTooSmall: If k < 2
    """
    check_base(k)
    _check_args(a, b)
    if b is MINUS_ONE:
        return LeqWith(1) if t >= 1 else GREATER
    if max(a, b) >= t:
        return GREATER
    try:
        return LeqWith(_ack(a, k, b, _Limit(max_value=t)))
    except _Overflow:
        return GREATER


def ack_iter(a: int, k: int, b: Arg, j: int, budget: EvalBudget | None = None) -> BoundedNat:
    """Evaluate the j-fold iterate A_a^j(k, b) under a budget.

    Raises:
        BaseTooSmall: If k < 2
        IterZeroOnSentinel: If j == 0 and b is MINUS_ONE

    Example:
        >>> ack_iter(0, 2, 1, 2)
        Value(n=4)
    """
    check_base(k)
    _check_args(a, b)
    if j < 0:
        raise ValueError(f"iteration count must be a natural number, got {j}")
    if j == 0:
        if b is MINUS_ONE:
            raise IterZeroOnSentinel()
        return Value(b)
    budget = budget or EvalBudget.from_settings()
    limit = _Limit(max_digits=budget.max_digits, max_calls=budget.max_calls)
    value: Arg = b
    try:
        for _ in range(j):
            value = _ack(a, k, value, limit)
    except _Overflow:
        return EXCEEDED
    assert value is not MINUS_ONE
    return Value(value)


def ack_iter_cmp_threshold(a: int, k: int, b: Arg, j: int, t: int) -> ThresholdResult:
    """Decide whether A_a^j(k, b) <= t.

    Every application strictly increases its argument, so the first
    application that passes t settles the answer.
    """
    check_base(k)
    if j == 0:
        if b is MINUS_ONE:
            raise IterZeroOnSentinel()
        return LeqWith(b) if b <= t else GREATER
    value: Arg = b
    for _ in range(j):
        result = ack_cmp_threshold(a, k, value, t)
        if not isinstance(result, LeqWith):
            return GREATER
        value = result.value
    assert value is not MINUS_ONE
    return LeqWith(value)


def ack_exceeds(c: int, y: Arg, a: int, b: int, k: int) -> bool:
    """Decide A_c(k, y) > A_a(k, b) for c >= a without evaluating A_a(k, b).

    Peels A_c(y) = A_{c-1}(A_{c-1}^{k-1}(A_c(y - 1))) level by level; only
    thresholds against the concrete b are ever evaluated.
    """
    check_base(k)
    if c < a:
        raise ValueError("ack_exceeds needs c >= a")
    while True:
        if y is MINUS_ONE:
            # A_c(-1) = 1 <= A_a(b)
            return False
        if c == a:
            return y > b
        if y >= b:
            # c > a and y >= b: A_c(y) >= A_c(b) > A_a(b)
            return True
        inner = ack_cmp_threshold(c, k, y - 1 if y > 0 else MINUS_ONE, b)
        if not isinstance(inner, LeqWith):
            return True
        outer = ack_iter_cmp_threshold(c - 1, k, inner.value, k - 1, b)
        if not isinstance(outer, LeqWith):
            # A_{c-1}(x) with x > b and c - 1 >= a
            return True
        c, y = c - 1, outer.value


def iterate_compare(a: int, k: int, j1: int, x1: int, j2: int, x2: int) -> Order:
    """Compare A_a^{j1}(k, x1) with A_a^{j2}(k, x2) using injectivity of A_a.

    Common applications are stripped first, leaving one side concrete.
    """
    check_base(k)
    common = min(j1, j2)
    j1, j2 = j1 - common, j2 - common
    if j1 == 0 and j2 == 0:
        return Order.of(x1, x2)
    if j1 == 0:
        return iterate_compare(a, k, j2, x2, 0, x1).flip()
    result = ack_iter_cmp_threshold(a, k, x1, j1, x2)
    if not isinstance(result, LeqWith):
        return Order.GT
    return Order.of(result.value, x2)
