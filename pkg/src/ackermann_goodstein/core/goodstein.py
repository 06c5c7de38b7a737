"""The Ackermannian Goodstein process and its ordinal assignment.

G_0 = m read in base 2, and G_{i+1} is G_i with base i+2 replaced by i+3,
minus one. Each state gets the ordinal O_m(i), the base-omega image of its
normal form; the process terminates because these ordinals strictly
descend.

Two modes share one driver:
- concrete: keep the number, normalize it, evaluate the base-changed term
- symbolic: keep the normal term and step it with base_change and predecessor
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Union

from ackermann_goodstein.core.ackermann import ack_eval
from ackermann_goodstein.core.errors import Blowup, ZeroInput
from ackermann_goodstein.core.expansion import predecessor
from ackermann_goodstein.core.grammar import print_term
from ackermann_goodstein.core.normal_form import base_change, eval_term, normal_form
from ackermann_goodstein.core.ordinal import OrdTerm, ord_order, stepdown, to_ordinal
from ackermann_goodstein.core.terms import ZERO, Term, Zero
from ackermann_goodstein.core.types import EXCEEDED, BoundedNat, EvalBudget, Order, Value
from ackermann_goodstein.logging import LogContext, get_logger

logger = get_logger("core.goodstein")


class Mode(str, Enum):
    """How a run represents its states."""

    CONCRETE = "concrete"
    SYMBOLIC = "symbolic"


@dataclass(frozen=True)
class Concrete:
    n: int


@dataclass(frozen=True)
class Symbolic:
    term: Term


@dataclass(frozen=True)
class GoodsteinState:
    """G_i, read in base i + 2."""

    i: int
    value: Union[Concrete, Symbolic]

    @property
    def base(self) -> int:
        return self.i + 2

    @property
    def is_zero(self) -> bool:
        if isinstance(self.value, Concrete):
            return self.value.n == 0
        return isinstance(self.value.term, Zero)

    def term(self) -> Term:
        """The base-(i+2) normal form of the state."""
        if isinstance(self.value, Symbolic):
            return self.value.term
        return normal_form(self.value.n, self.base)

    @classmethod
    def start(cls, m: int, mode: Mode = Mode.CONCRETE) -> GoodsteinState:
        if m < 0:
            raise ValueError(f"seed must be a natural number, got {m}")
        if mode is Mode.SYMBOLIC:
            return cls(0, Symbolic(normal_form(m, 2)))
        return cls(0, Concrete(m))


def ordinal_of_state(state: GoodsteinState) -> OrdTerm:
    """O_m(i): the base-omega image of G_i's base-(i+2) normal form."""
    return to_ordinal(state.term())


def raised_value(state: GoodsteinState, budget: EvalBudget | None = None) -> BoundedNat:
    """The value of G_i after the base change, before subtracting one."""
    changed = base_change(state.term(), state.base, state.base + 1)
    return eval_term(changed, state.base + 1, budget)


def gstep(state: GoodsteinState, budget: EvalBudget | None = None) -> GoodsteinState:
    """Advance one step: change base i+2 to i+3, then subtract one.

    Raises:
        ZeroInput: If the state is already zero
        Blowup: If the next state does not fit the budget

    Example:
        >>> gstep(GoodsteinState(0, Concrete(4))).value == Concrete(3**27 - 1)
        True
    """
    if state.is_zero:
        raise ZeroInput("the process already reached zero")
    budget = budget or EvalBudget.from_settings()
    k = state.base
    if isinstance(state.value, Concrete):
        raised = raised_value(state, budget)
        if not isinstance(raised, Value):
            raise Blowup(f"base change of G_{state.i} exceeds {budget.max_digits} digits")
        return GoodsteinState(state.i + 1, Concrete(raised.n - 1))
    changed = base_change(state.value.term, k, k + 1)
    return GoodsteinState(state.i + 1, Symbolic(predecessor(changed, k + 1, budget)))


# Traces


@dataclass(frozen=True)
class TraceEntry:
    """One recorded state with its ordinal and the descent check to the next."""

    i: int
    base: int
    term: Term
    ordinal: OrdTerm
    value: Optional[int] = None
    descent_ok: Optional[bool] = None

    @property
    def nf(self) -> str:
        return print_term(self.term)


@dataclass(frozen=True)
class Terminated:
    """G_at = 0."""

    at: int


@dataclass(frozen=True)
class Budget:
    """The run stopped at step `at` without reaching zero."""

    at: int
    reason: str


TraceOutcome = Union[Terminated, Budget]


@dataclass(frozen=True)
class GoodsteinTrace:
    seed: int
    mode: Mode
    entries: tuple[TraceEntry, ...] = field(default_factory=tuple)
    outcome: TraceOutcome = field(default_factory=lambda: Terminated(0))

    @property
    def values(self) -> list[Optional[int]]:
        return [entry.value for entry in self.entries]

    @property
    def ordinals(self) -> list[OrdTerm]:
        return [entry.ordinal for entry in self.entries]


def _entry(state: GoodsteinState) -> TraceEntry:
    term = state.term()
    value = state.value.n if isinstance(state.value, Concrete) else None
    return TraceEntry(state.i, state.base, term, to_ordinal(term), value)


def _link(entries: list[TraceEntry]) -> tuple[TraceEntry, ...]:
    linked = []
    for current, following in zip(entries, entries[1:]):
        ok = ord_order(current.ordinal, following.ordinal) is Order.GT
        linked.append(replace(current, descent_ok=ok))
    if entries:
        linked.append(entries[-1])
    return tuple(linked)


def grun(
    m: int,
    mode: Mode = Mode.CONCRETE,
    max_steps: int | None = None,
    budget: EvalBudget | None = None,
) -> GoodsteinTrace:
    """Run the process from seed m until zero, the step cap or a blowup.

    Args:
        m: Seed
        mode: Concrete or symbolic states
        max_steps: Step cap (defaults from settings)
        budget: Evaluation budget (defaults from settings)

    Returns:
        The trace, including the final state reached

    Example:
        >>> [e.value for e in grun(3).entries]
        [3, 3, 3, 2, 1, 0]
    """
    if max_steps is None:
        from ackermann_goodstein.config import get_settings

        max_steps = get_settings().default_max_steps
    budget = budget or EvalBudget.from_settings()

    state = GoodsteinState.start(m, mode)
    entries = [_entry(state)]
    outcome: TraceOutcome
    with LogContext(logger, seed=m, mode=mode.value):
        while True:
            if state.is_zero:
                outcome = Terminated(state.i)
                break
            if state.i >= max_steps:
                outcome = Budget(state.i, "max_steps")
                break
            try:
                state = gstep(state, budget)
            except Blowup as e:
                logger.debug("run stopped at step %d: %s", state.i, e)
                outcome = Budget(state.i, "blowup")
                break
            entries.append(_entry(state))
            logger.debug("step %d in base %d", state.i, state.base)
    return GoodsteinTrace(m, mode, _link(entries), outcome)


def descent_check(trace: GoodsteinTrace) -> bool:
    """Whether the trace's ordinals strictly decrease; vacuously true for one entry."""
    ordinals = trace.ordinals
    return all(
        ord_order(current, following) is Order.GT
        for current, following in zip(ordinals, ordinals[1:])
    )


# Fundamental sequence bound


@dataclass(frozen=True)
class BoundRow:
    """O_m(k) against <k+1>O_m(0); ok is None when either side is missing."""

    k: int
    ordinal: Optional[OrdTerm]
    bound: Optional[OrdTerm]
    ok: Optional[bool]


@dataclass(frozen=True)
class FsBoundReport:
    m: int
    rows: tuple[BoundRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.ok is not False for row in self.rows)

    @property
    def unchecked(self) -> int:
        return sum(1 for row in self.rows if row.ok is None)


def fs_bound_check(
    m: int,
    steps: int,
    mode: Mode = Mode.SYMBOLIC,
    budget: EvalBudget | None = None,
) -> FsBoundReport:
    """Check O_m(k) >= <k+1>O_m(0) for k = 0..steps.

    Rows past a blowup are kept with ok=None. Rows past termination compare
    against zero on the left.

    Example:
        >>> fs_bound_check(3, 4).passed
        True
    """
    trace = grun(m, mode, steps, budget)
    start = trace.entries[0].ordinal
    report = stepdown(start, steps)
    rows = []
    for k in range(steps + 1):
        ordinal: Optional[OrdTerm] = None
        if k < len(trace.entries):
            ordinal = trace.entries[k].ordinal
        elif isinstance(trace.outcome, Terminated):
            ordinal = ZERO
        bound = report.value_at(k + 1)
        ok = None
        if ordinal is not None and bound is not None:
            ok = ord_order(ordinal, bound) is not Order.LT
        rows.append(BoundRow(k, ordinal, bound, ok))
    return FsBoundReport(m, tuple(rows))


def goodstein_seed(n: int, budget: EvalBudget | None = None) -> BoundedNat:
    """a_0 = 0 and a_{n+1} = A_{a_n}(2, 0); only a_0, a_1, a_2 fit any budget."""
    value = 0
    for _ in range(n):
        result = ack_eval(value, 2, 0, budget)
        if not isinstance(result, Value):
            return EXCEEDED
        value = result.n
    return Value(value)
