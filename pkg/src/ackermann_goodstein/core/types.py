"""Small value types shared across the toolkit.

Variant results are frozen dataclasses for the cases that carry data and
one-member Enums for the singleton cases, so callers can match on them:

    match ack_eval(1, 2, 1):
        case Value(n):
            ...
        case Exceeded.EXCEEDED:
            ...
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import TYPE_CHECKING, Literal, Union

if TYPE_CHECKING:
    from ackermann_goodstein.config import Settings

LOG10_2 = math.log10(2)


class MinusOne(Enum):
    """Sentinel for the auxiliary Ackermann argument -1 (A_a(-1) = 1)."""

    MINUS_ONE = "MINUS_ONE"

    def __repr__(self) -> str:
        return "MINUS_ONE"


MINUS_ONE = MinusOne.MINUS_ONE

# Second Ackermann argument: a natural number or the -1 sentinel
Arg = Union[int, Literal[MinusOne.MINUS_ONE]]


class Order(Enum):
    """Three-way comparison outcome."""

    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, left: int, right: int) -> Order:
        if left < right:
            return cls.LT
        if left > right:
            return cls.GT
        return cls.EQ

    def flip(self) -> Order:
        return Order(-self.value)


@dataclass(frozen=True)
class EvalBudget:
    """Caps applied to every budget-aware evaluation.

    Attributes:
        max_digits: Cap on the decimal length of any intermediate value
        max_calls: Cap on fresh Ackermann unfoldings per top-level evaluation
        max_term_size: Cap on the node count of symbolically built terms
    """

    max_digits: int = 100_000
    max_calls: int = 10_000_000
    max_term_size: int = 200_000

    def __post_init__(self) -> None:
        for name in ("max_digits", "max_calls", "max_term_size"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_settings(cls, settings: Settings | None = None) -> EvalBudget:
        """Build the default budget from the global settings."""
        if settings is None:
            from ackermann_goodstein.config import get_settings

            settings = get_settings()
        return cls(
            max_digits=settings.max_digits,
            max_calls=settings.max_calls,
            max_term_size=settings.max_term_size,
        )

    def with_overrides(
        self,
        max_digits: int | None = None,
        max_calls: int | None = None,
        max_term_size: int | None = None,
    ) -> EvalBudget:
        """Return a copy with the given caps replaced (None keeps the current cap)."""
        return replace(
            self,
            max_digits=max_digits if max_digits is not None else self.max_digits,
            max_calls=max_calls if max_calls is not None else self.max_calls,
            max_term_size=max_term_size if max_term_size is not None else self.max_term_size,
        )


@dataclass(frozen=True)
class Value:
    """An exact natural number that fit the budget."""

    n: int


class Exceeded(Enum):
    """The true value's representation surpasses the budget."""

    EXCEEDED = "exceeded"

    def __repr__(self) -> str:
        return "EXCEEDED"


EXCEEDED = Exceeded.EXCEEDED

BoundedNat = Union[Value, Literal[Exceeded.EXCEEDED]]


@dataclass(frozen=True)
class LeqWith:
    """The value is at most the threshold; carries the exact value."""

    value: int


class Greater(Enum):
    """The value is strictly above the threshold."""

    GREATER = "greater"

    def __repr__(self) -> str:
        return "GREATER"


GREATER = Greater.GREATER

ThresholdResult = Union[LeqWith, Literal[Greater.GREATER]]


def exceeds_digits(n: int, max_digits: int) -> bool:
    """Whether n has more than max_digits decimal digits.

    Uses the bit length to settle clear cases and one exact power-of-ten
    comparison near the boundary.
    """
    bits = n.bit_length()
    if bits * LOG10_2 < max_digits - 1:
        return False
    if (bits - 1) * LOG10_2 >= max_digits + 1:
        return True
    return n >= 10**max_digits


def power_exceeds_digits(k: int, b: int, max_digits: int) -> bool:
    """Whether k ** b surely has more than max_digits decimal digits.

    Never computes the power. Exponents too large for float arithmetic are
    settled by size alone, since log10(k) >= log10(2) > 1/4.
    """
    if b > 4 * (max_digits + 1):
        return True
    return b * math.log10(k) >= max_digits + 1


def decimal_digits(n: int) -> int:
    """Exact number of decimal digits of a natural number (1 for 0)."""
    if n < 10:
        return 1
    estimate = int((n.bit_length() - 1) * LOG10_2) + 1
    if n >= 10**estimate:
        return estimate + 1
    if n < 10 ** (estimate - 1):
        return estimate - 1
    return estimate
