"""Named verification suites.

Each suite is a list of cases plus a check for one case. Cases are built
from a seeded RNG and a size limit, so a run is reproducible from
(suite, seed, limit). A check raises CaseFailure on a violated property and
CaseSkipped when the budget cannot decide; Blowup counts as skipped.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from contextvars import copy_context
from dataclasses import dataclass
from typing import Any, Callable, Optional

from ackermann_goodstein.config import get_settings
from ackermann_goodstein.core.ackermann import ack_cmp_threshold, ack_eval
from ackermann_goodstein.core.errors import Blowup, UnknownSuite
from ackermann_goodstein.core.expansion import left_expansion, predecessor
from ackermann_goodstein.core.goodstein import (
    GoodsteinState,
    Mode,
    Terminated,
    descent_check,
    grun,
    gstep,
)
from ackermann_goodstein.core.grammar import print_ordinal, print_term
from ackermann_goodstein.core.normal_form import (
    VALID,
    base_change,
    base_change_value,
    eval_term,
    is_normal_block,
    normal_form,
    sandwich,
    term_compare,
    validate_nf,
)
from ackermann_goodstein.core.oracle import (
    alt_normal_form,
    naive_ack,
    oracle_sandwich,
    separation_check,
)
from ackermann_goodstein.core.ordinal import (
    OrdTerm,
    Preceq,
    fund_seq,
    ord_order,
    ord_validate,
    preceq_chain,
    preceq_k_bounded,
    to_ordinal,
)
from ackermann_goodstein.core.terms import Node, Term, Zero, is_single_block
from ackermann_goodstein.core.types import EXCEEDED, GREATER, EvalBudget, LeqWith, Order, Value
from ackermann_goodstein.logging import LogContext, get_logger
from ackermann_goodstein.models.report import SuiteReportModel
from ackermann_goodstein.verify.sampling import (
    BELOW_PHI_2,
    random_nonzero_ordinal,
    random_small_ordinal,
)

logger = get_logger("verify.suites")

MAX_DETAILS = 20
CHAIN_STEPS = 10_000
# Per-edge walks in preceq-monotone start from terms of small norm
EDGE_STEPS = 128
CHAIN_NORM = 10

# Termination indices of the smallest seeds
KNOWN_TERMINATION = {0: 0, 1: 1, 2: 3, 3: 5}
GOODSTEIN_STEPS = 24


class CaseFailure(Exception):
    """A property was violated for one case."""


class CaseSkipped(Exception):
    """The budget could not decide one case."""


Check = Callable[[Any, EvalBudget], None]
CaseSource = Callable[[random.Random, int], list[Any]]


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    default_limit: int
    cases: CaseSource
    check: Check


SUITES: dict[str, Suite] = {}


def suite(name: str, default_limit: int, cases: CaseSource) -> Callable[[Check], Check]:
    """Register a check function as a named suite; its docstring is the description."""

    def decorator(check: Check) -> Check:
        description = (check.__doc__ or name).strip().splitlines()[0]
        SUITES[name] = Suite(name, description, default_limit, cases, check)
        return check

    return decorator


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CaseFailure(message)


def _value(result: Any) -> int:
    if not isinstance(result, Value):
        raise CaseSkipped("value exceeds the budget")
    return result.n


def _numbers(start: int, bases: tuple[int, ...] = (2, 3, 4)) -> CaseSource:
    def cases(rng: random.Random, limit: int) -> list[Any]:
        return [(m, k) for k in bases for m in range(start, limit + 1)]

    return cases


def _seeds(start: int) -> CaseSource:
    def cases(rng: random.Random, limit: int) -> list[Any]:
        return list(range(start, limit + 1))

    return cases


# Ackermann values


def _ack_cases(rng: random.Random, limit: int) -> list[Any]:
    return [(a, b, k) for k in (2, 3, 4) for a in range(4) for b in range(min(limit, 7))]


@suite("nat-monotonicity", 7, _ack_cases)
def check_ack(case: tuple[int, int, int], budget: EvalBudget) -> None:
    """Ackermann values grow in every argument and agree with the naive evaluator."""
    a, b, k = case
    value = _value(ack_eval(a, k, b, budget))
    _require(max(a, b) < value, f"A_{a}({k},{b}) = {value} is not above max(a, b)")
    for bigger in (ack_eval(a, k, b + 1, budget), ack_eval(a + 1, k, b, budget)):
        if isinstance(bigger, Value):
            _require(bigger.n > value, f"A_{a}({k},{b}) is not below its successors")
    wider = ack_eval(a, k + 1, b, budget)
    if isinstance(wider, Value):
        # A_0(k, 0) = 1 for every base
        if a + b > 0:
            _require(wider.n > value, f"A_{a}({k},{b}) does not grow with the base")
        else:
            _require(wider.n == value, f"A_0({k},0) is not 1")
    _require(naive_ack(a, k, b, budget.max_digits) == value, f"naive A_{a}({k},{b}) differs")
    _require(ack_cmp_threshold(a, k, b, value) == LeqWith(value), "threshold at the value")
    _require(ack_cmp_threshold(a, k, b, value - 1) is GREATER, "threshold below the value")


# Normal forms


@suite("sandwich-oracle", 100_000, _numbers(1))
def check_sandwich(case: tuple[int, int], budget: EvalBudget) -> None:
    """sandwich agrees with the linear-search oracle and has the sandwich properties."""
    m, k = case
    seq = sandwich(m, k)
    _require(seq.steps == oracle_sandwich(m, k).steps, f"sandwich({m},{k}) differs from oracle")
    values = seq.values
    for i, step in enumerate(seq.steps):
        _require(values[i] <= step.arg < step.value, f"argument out of order in sandwich({m},{k})")
        if i > 0:
            _require(seq.steps[i - 1].index > step.index, f"indices rise in sandwich({m},{k})")
        _require(sandwich(step.value, k).steps == seq.steps[: i + 1], f"prefix {i + 1} of {m}")
        above = ack_eval(step.index, k, step.arg + 1, budget)
        if not isinstance(above, Value):
            continue
        bound = ack_cmp_threshold(step.index + 1, k, values[i], above.n - 1)
        _require(bound is GREATER, f"argument bound fails at step {i + 1} of sandwich({m},{k})")
        if i > 0:
            previous = seq.steps[i - 1]
            outer = ack_cmp_threshold(previous.index, k, previous.arg + 1, above.n - 1)
            _require(outer is GREATER, f"outer bound fails at step {i + 1} of sandwich({m},{k})")
    _require(ack_cmp_threshold(0, k, seq.last.value, m) is GREATER, "sandwich stopped early")


@suite("roundtrip", 100_000, _numbers(0))
def check_roundtrip(case: tuple[int, int], budget: EvalBudget) -> None:
    """Normal forms evaluate back to their number and validate."""
    m, k = case
    term = normal_form(m, k)
    _require(eval_term(term, k, budget) == Value(m), f"nf({m},{k}) evaluates wrongly")
    _require(validate_nf(term, k, budget) is VALID, f"nf({m},{k}) does not validate")


def _predecessor_cases(rng: random.Random, limit: int) -> list[Any]:
    return _numbers(2, (2, 3))(rng, limit) + [(3**27, 3)]


@suite("predecessor", 100_000, _predecessor_cases)
def check_predecessor(case: tuple[int, int], budget: EvalBudget) -> None:
    """The symbolic predecessor is the normal form of m - 1."""
    m, k = case
    result = predecessor(normal_form(m, k), k, budget)
    _require(result == normal_form(m - 1, k), f"pred(nf({m},{k})) = {print_term(result)}")


def _head_cases(rng: random.Random, limit: int) -> list[Any]:
    return [(a, b, k) for a in (1, 2) for k in (2, 3) for b in range(limit)]


@suite("left-expansion", 4, _head_cases)
def check_left_expansion(case: tuple[int, int, int], budget: EvalBudget) -> None:
    """k * c_a equals the head and the c_i climb strictly between b and the head."""
    a, b, k = case
    block = Node(normal_form(a, k), normal_form(b, k))
    if is_normal_block(block.index, block.arg, k, budget) is not True:
        raise CaseSkipped(f"A_{a}({b}) is not a normal block in base {k}")
    total = _value(eval_term(block, k, budget))
    members = [_value(eval_term(c, k, budget)) for c in left_expansion(block, k, budget).c]
    _require(k * members[-1] == total, f"k * c_a != A_{a}({b}) in base {k}")
    for i, value in enumerate(members):
        if i < a:
            _require(k * value < total, f"k * c_{i} >= A_{a}({b}) in base {k}")
        low = b if i == 0 else members[i - 1]
        _require(low < value < total, f"c_{i} out of range for A_{a}({b}) in base {k}")


# Base change


def _raised_image(m: int, budget: EvalBudget) -> Term:
    """<m>(2 -> 3) as a term, checked to be base-3 normal."""
    image = base_change(normal_form(m, 2), 2, 3)
    verdict = validate_nf(image, 3, budget)
    if verdict is EXCEEDED:
        raise CaseSkipped(f"<{m}>(2->3) undecided")
    _require(verdict is VALID, f"<{m}>(2->3) is not normal: {verdict}")
    return image


@suite("monotonicity", 4096, _seeds(0))
def check_monotonicity(m: int, budget: EvalBudget) -> None:
    """Base change from 2 to 3 is strictly increasing.

    Values are compared directly while they fit the budget; past that the
    images are validated as base-3 normal forms and compared as such.
    """
    low, high = base_change_value(m, 2, 3, budget), base_change_value(m + 1, 2, 3, budget)
    if isinstance(low, Value) and isinstance(high, Value):
        _require(low.n < high.n, f"<{m}> >= <{m + 1}> after base change")
        return
    order = term_compare(_raised_image(m, budget), _raised_image(m + 1, budget))
    _require(order is Order.LT, f"<{m}> >= <{m + 1}> after base change")


@suite("preservation", 4096, _seeds(1))
def check_preservation(m: int, budget: EvalBudget) -> None:
    """Base change from 2 to 3 yields a base-3 normal form."""
    _raised_image(m, budget)


@suite("commutation", 4096, _seeds(1))
def check_commutation(m: int, budget: EvalBudget) -> None:
    """Going to omega directly or through base 3 gives the same ordinal.

    When <m>(2 -> 3) fits the budget its normal form is rebuilt from the
    value; otherwise the image itself must be base-3 normal.
    """
    direct = to_ordinal(normal_form(m, 2))
    raised = base_change_value(m, 2, 3, budget)
    if isinstance(raised, Value):
        through = normal_form(raised.n, 3)
    else:
        through = _raised_image(m, budget)
    _require(
        ord_order(direct, to_ordinal(through)) is Order.EQ,
        f"ordinal of {m} changes through base 3",
    )


def _block_cases(rng: random.Random, limit: int) -> list[Any]:
    cases = []
    for k in (2, 3, 4):
        for m in range(1, limit + 1):
            if is_single_block(normal_form(m, k)):
                cases.extend((m, k, p) for p in range(1, k))
    return cases


@suite("coefficient", 1000, _block_cases)
def check_coefficient(case: tuple[int, int, int], budget: EvalBudget) -> None:
    """A normal block times a coefficient below the base stays normal."""
    m, k, p = case
    block = normal_form(m, k)
    assert isinstance(block, Node)
    verdict = validate_nf(Node(block.index, block.arg, p), k, budget)
    if verdict is EXCEEDED:
        raise CaseSkipped(f"nf({m},{k}) * {p} undecided")
    _require(verdict is VALID, f"nf({m},{k}) * {p} is not normal: {verdict}")


# Ordinals


def _fs_cases(rng: random.Random, limit: int) -> list[Any]:
    return [(random_nonzero_ordinal(rng, 6), rng.choice((1, 2, 3, 5))) for _ in range(limit)]


@suite("fs-descent", 10_000, _fs_cases)
def check_fs_descent(case: tuple[OrdTerm, int], budget: EvalBudget) -> None:
    """Fundamental sequence members are valid and strictly smaller."""
    xi, x = case
    member = fund_seq(xi, x)
    _require(ord_validate(member), f"[{x}]{print_ordinal(xi)} is not valid")
    _require(ord_order(member, xi) is Order.LT, f"[{x}]{print_ordinal(xi)} is not smaller")


def _triple_cases(rng: random.Random, limit: int) -> list[Any]:
    return [tuple(random_nonzero_ordinal(rng, 4) for _ in range(3)) for _ in range(limit)]


@suite("total-order", 2000, _triple_cases)
def check_total_order(case: tuple[OrdTerm, OrdTerm, OrdTerm], budget: EvalBudget) -> None:
    """Ordinal comparison is antisymmetric and transitive."""
    for x in case:
        for y in case:
            _require(ord_order(x, y) == ord_order(y, x).flip(), "comparison is not antisymmetric")
            for z in case:
                if ord_order(x, y) is not Order.GT and ord_order(y, z) is not Order.GT:
                    _require(ord_order(x, z) is not Order.GT, "comparison is not transitive")


def _bachmann_cases(rng: random.Random, limit: int) -> list[Any]:
    cases = []
    for _ in range(limit):
        k = rng.choice((1, 2, 3))
        alpha = random_nonzero_ordinal(rng, 4, indices=BELOW_PHI_2)
        cases.append((alpha, k, k + rng.randint(1, 3)))
    return cases


@suite("bachmann", 1000, _bachmann_cases)
def check_bachmann(case: tuple[OrdTerm, int, int], budget: EvalBudget) -> None:
    """[k]alpha < beta < alpha implies [k]alpha <=_1 beta, sampled below phi_2(0)."""
    alpha, k, x = case
    lower, beta = fund_seq(alpha, k), fund_seq(alpha, x)
    if ord_order(lower, beta) is not Order.LT:
        raise CaseSkipped("no beta strictly between [k]alpha and alpha")
    verdict = preceq_k_bounded(lower, beta, 1, CHAIN_STEPS)
    if verdict is Preceq.BUDGET_EXCEEDED:
        raise CaseSkipped("chain longer than the step cap")
    _require(
        verdict is Preceq.HOLDS,
        f"[{k}]{print_ordinal(alpha)} is not <=_1 [{x}]{print_ordinal(alpha)}",
    )


def _chain_cases(rng: random.Random, limit: int) -> list[Any]:
    return [
        (
            random_small_ordinal(rng, CHAIN_NORM, indices=BELOW_PHI_2),
            rng.choice((1, 2, 3)),
            rng.randint(1, 3),
        )
        for _ in range(limit)
    ]


@suite("preceq-monotone", 1000, _chain_cases)
def check_preceq_monotone(case: tuple[OrdTerm, int, int], budget: EvalBudget) -> None:
    """alpha <=_k beta implies alpha <=_{k+1} beta, edge by edge along [k] chains.

    Each edge [k]gamma <=_k gamma is widened on its own, so the bounded walk
    only has to cover the gap between [k]gamma and gamma.
    """
    alpha, k, steps = case
    current = alpha
    for _ in range(steps):
        if isinstance(current, Zero):
            break
        lower = fund_seq(current, k)
        verdict, _ = preceq_chain(lower, current, k, 1)
        _require(verdict is Preceq.HOLDS, f"[{k}]{print_ordinal(current)} is not <=_{k} its source")
        widened = preceq_k_bounded(lower, current, k + 1, EDGE_STEPS)
        if widened is Preceq.BUDGET_EXCEEDED:
            raise CaseSkipped(f"[{k + 1}] walk from {print_ordinal(current)} exceeds the step cap")
        _require(
            widened is Preceq.HOLDS,
            f"[{k}]{print_ordinal(current)} <=_{k} {print_ordinal(current)} but not <=_{k + 1}",
        )
        current = lower


# The process


@suite("weak-fs-bound", 256, _seeds(1))
def check_weak_fs_bound(m: int, budget: EvalBudget) -> None:
    """One symbolic step from m lands at or above [2] of the starting ordinal."""
    state = GoodsteinState.start(m, Mode.SYMBOLIC)
    following = gstep(state, budget)
    bound = fund_seq(to_ordinal(state.term()), 2)
    _require(
        ord_order(bound, to_ordinal(following.term())) is not Order.GT,
        f"O_{m}(1) is below [2]O_{m}(0)",
    )


@suite("goodstein", 64, _seeds(0))
def check_goodstein(m: int, budget: EvalBudget) -> None:
    """Concrete runs descend, terminate where known and agree with symbolic runs."""
    trace = grun(m, Mode.CONCRETE, max_steps=GOODSTEIN_STEPS, budget=budget)
    _require(descent_check(trace), f"ordinals do not descend for seed {m}")
    if m in KNOWN_TERMINATION:
        expected = Terminated(KNOWN_TERMINATION[m])
        _require(trace.outcome == expected, f"seed {m} ended with {trace.outcome}")
    for current, following in zip(trace.entries, trace.entries[1:]):
        if current.value is None or following.value is None:
            continue
        if current.value >= current.base:
            _require(
                following.value + 1 > current.value,
                f"base change does not grow G_{current.i} for seed {m}",
            )
    symbolic = grun(m, Mode.SYMBOLIC, max_steps=len(trace.entries) - 1, budget=budget)
    for left, right in zip(trace.entries, symbolic.entries):
        _require(left.nf == right.nf, f"modes disagree at G_{left.i} for seed {m}")


def _alt_cases(rng: random.Random, limit: int) -> list[Any]:
    separations: list[Any] = [("separation", j) for j in (1, 2, 3)]
    return separations + [("alt", m, k) for k in (2, 3) for m in range(1, limit + 1)]


@suite("alt-nf", 4096, _alt_cases)
def check_alt_nf(case: tuple[Any, ...], budget: EvalBudget) -> None:
    """The alternative normal form is consistent; A_1^j(2, 2) is never an A_2 value."""
    if case[0] == "separation":
        _require(separation_check(case[1]), f"A_1^{case[1]}(2, 2) is an A_2 value")
        return
    _, m, k = case
    alt = alt_normal_form(m, k)
    _require(
        naive_ack(alt.a, k, alt.b, budget.max_digits) + alt.c == m,
        f"alternative form of {m} in base {k} does not add up",
    )
    last = sandwich(m, k).last
    if (alt.a, alt.b) != (last.index, last.arg):
        logger.debug(
            "alternative head A_%d(%d) differs from sandwich head A_%d(%d) for m=%d, k=%d",
            alt.a, alt.b, last.index, last.arg, m, k,
        )


# Runner


def _run_case(check: Check, case: Any, budget: EvalBudget) -> tuple[str, str | None]:
    try:
        check(case, budget)
    except CaseFailure as e:
        return "failed", str(e)
    except (CaseSkipped, Blowup) as e:
        logger.debug("skipped %r: %s", case, e)
        return "skipped", None
    except Exception as e:
        logger.exception("case %r raised", case)
        return "failed", f"{case!r}: {type(e).__name__}: {e}"
    return "passed", None


def run_suite(
    name: str,
    seed: Optional[int] = None,
    limit: Optional[int] = None,
    budget: Optional[EvalBudget] = None,
    workers: int = 1,
) -> SuiteReportModel:
    """Run one named suite and summarize it.

    Args:
        name: Registered suite name (see SUITES)
        seed: RNG seed for sampled cases (defaults from settings)
        limit: Sweep or sample size (defaults per suite)
        budget: Evaluation budget (defaults from settings)
        workers: Threads used to check cases

    Returns:
        A report with counts and the first failure messages

    Raises:
        UnknownSuite: If name is not registered

    Example:
        >>> run_suite("roundtrip", limit=64).passed
        True
    """
    if name not in SUITES:
        raise UnknownSuite(name, sorted(SUITES))
    entry = SUITES[name]
    if seed is None:
        seed = get_settings().random_seed
    limit = limit or entry.default_limit
    budget = budget or EvalBudget.from_settings()

    report = SuiteReportModel(suite=name, seed=seed, limit=limit)
    with LogContext(logger, suite=name, seed=seed):
        cases = entry.cases(random.Random(seed), limit)
        logger.info("running %d cases", len(cases))
        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            contexts = [copy_context() for _ in cases]
            outcomes = pool.map(
                lambda case, ctx: ctx.run(_run_case, entry.check, case, budget), cases, contexts
            )
            for status, message in outcomes:
                if status == "skipped":
                    report.skipped += 1
                    continue
                report.checked += 1
                if status == "failed":
                    report.failures += 1
                    if message and len(report.details) < MAX_DETAILS:
                        report.details.append(message)
        logger.info(
            "checked %d, failed %d, skipped %d",
            report.checked, report.failures, report.skipped,
        )
    return report
