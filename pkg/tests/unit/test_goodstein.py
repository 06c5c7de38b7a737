"""Tests for the Ackermannian Goodstein process."""

import pytest

from ackermann_goodstein.core.errors import Blowup, ZeroInput
from ackermann_goodstein.core.goodstein import (
    Budget,
    Concrete,
    GoodsteinState,
    Mode,
    Symbolic,
    Terminated,
    descent_check,
    fs_bound_check,
    goodstein_seed,
    grun,
    gstep,
    ordinal_of_state,
    raised_value,
)
from ackermann_goodstein.core.grammar import print_ordinal
from ackermann_goodstein.core.normal_form import normal_form
from ackermann_goodstein.core.ordinal import gamma
from ackermann_goodstein.core.types import EXCEEDED, EvalBudget, Value


class TestGoodsteinState:
    """Tests for GoodsteinState."""

    def test_start(self):
        """The process starts at i = 0 in base 2."""
        state = GoodsteinState.start(5)
        assert state.i == 0
        assert state.base == 2
        assert state.value == Concrete(5)

    def test_symbolic_start(self):
        """Symbolic runs start from the base-2 normal form."""
        state = GoodsteinState.start(5, Mode.SYMBOLIC)
        assert state.value == Symbolic(normal_form(5, 2))
        assert state.term() == normal_form(5, 2)

    def test_zero(self):
        """Zero states are recognized in both modes."""
        assert GoodsteinState.start(0).is_zero
        assert GoodsteinState.start(0, Mode.SYMBOLIC).is_zero

    def test_negative_seed(self):
        """Seeds are natural numbers."""
        with pytest.raises(ValueError):
            GoodsteinState.start(-1)

    def test_ordinal(self):
        """O_4(0) is phi_1(0)."""
        assert print_ordinal(ordinal_of_state(GoodsteinState.start(4))) == "phi(phi(0,0),0)"


class TestGstep:
    """Tests for gstep."""

    def test_four(self):
        """G_1 for seed 4 is 3 ** 27 - 1."""
        state = gstep(GoodsteinState.start(4))
        assert state.i == 1
        assert state.value == Concrete(3**27 - 1)

    def test_raised_value(self):
        """Before subtracting, 4 becomes A_1(3, 0)."""
        assert raised_value(GoodsteinState.start(4)) == Value(3**27)

    def test_symbolic_agrees(self):
        """The symbolic step lands on the normal form of the concrete one."""
        state = gstep(GoodsteinState.start(4, Mode.SYMBOLIC))
        assert state.term() == normal_form(3**27 - 1, 3)

    def test_zero_state(self):
        """Zero has no successor."""
        with pytest.raises(ZeroInput):
            gstep(GoodsteinState.start(0))

    def test_blowup(self):
        """A concrete step past the digit budget raises Blowup."""
        with pytest.raises(Blowup):
            gstep(GoodsteinState.start(4), EvalBudget(max_digits=5))


class TestGrun:
    """Tests for grun."""

    def test_seed_three(self):
        """3, 3, 3, 2, 1, 0."""
        trace = grun(3)
        assert trace.values == [3, 3, 3, 2, 1, 0]
        assert trace.outcome == Terminated(5)

    def test_small_seeds(self):
        """Seeds 0, 1 and 2 terminate at 0, 1 and 3."""
        assert grun(0).outcome == Terminated(0)
        assert grun(1).outcome == Terminated(1)
        assert grun(2).values == [2, 2, 1, 0]
        assert grun(2).outcome == Terminated(3)

    def test_descent(self):
        """Ordinals strictly descend along the trace."""
        trace = grun(3)
        assert descent_check(trace)
        assert [entry.descent_ok for entry in trace.entries] == [True] * 5 + [None]

    def test_bases(self):
        """G_i is read in base i + 2."""
        assert [entry.base for entry in grun(3).entries] == [2, 3, 4, 5, 6, 7]

    def test_step_cap(self):
        """The step cap ends the run with a budget outcome."""
        trace = grun(4, max_steps=1)
        assert trace.values == [4, 3**27 - 1]
        assert trace.outcome == Budget(1, "max_steps")

    def test_blowup_outcome(self):
        """A blowup ends the run with the last state kept."""
        trace = grun(4, max_steps=10, budget=EvalBudget(max_digits=5))
        assert trace.outcome == Budget(0, "blowup")
        assert len(trace.entries) == 1

    def test_modes_agree(self):
        """Concrete and symbolic traces print the same normal forms."""
        concrete = grun(3)
        symbolic = grun(3, Mode.SYMBOLIC)
        assert [e.nf for e in concrete.entries] == [e.nf for e in symbolic.entries]
        assert symbolic.outcome == Terminated(5)
        assert symbolic.values == [None] * 6

    def test_symbolic_seed_four(self):
        """Symbolic steps from 4 keep descending."""
        trace = grun(4, Mode.SYMBOLIC, max_steps=3)
        assert len(trace.entries) == 4
        assert descent_check(trace)

    def test_descent_vacuous(self):
        """A single-entry trace descends vacuously."""
        assert descent_check(grun(0))


class TestFsBound:
    """Tests for fs_bound_check."""

    def test_seed_three(self):
        """O_3(k) stays at or above <k+1>O_3(0)."""
        report = fs_bound_check(3, 6)
        assert report.passed
        assert report.rows[0].ok is True

    def test_seed_four(self):
        """The bound holds for the first symbolic steps from 4."""
        report = fs_bound_check(4, 3)
        assert report.passed


class TestGoodsteinSeed:
    """Tests for goodstein_seed."""

    def test_small(self):
        """a_0 = 0, a_1 = 1, a_2 = 4."""
        assert goodstein_seed(0) == Value(0)
        assert goodstein_seed(1) == Value(1)
        assert goodstein_seed(2) == Value(4)

    def test_exceeds(self):
        """a_3 = A_4(2, 0) does not fit."""
        assert goodstein_seed(3) is EXCEEDED

    def test_images(self):
        """The base-2 images of a_1 and a_2 are gamma_1 and gamma_2."""
        for n in (1, 2):
            value = goodstein_seed(n)
            assert isinstance(value, Value)
            assert ordinal_of_state(GoodsteinState.start(value.n)) == gamma(n)
