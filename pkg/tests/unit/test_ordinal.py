"""Tests for Veblen ordinal terms, fundamental sequences and the k-step relation."""

import pytest

from ackermann_goodstein.core.errors import InvalidTerm, ZeroHasNoFS
from ackermann_goodstein.core.grammar import parse_ordinal, print_ordinal
from ackermann_goodstein.core.normal_form import normal_form
from ackermann_goodstein.core.ordinal import (
    BUDGET_EXCEEDED,
    OMEGA,
    ORD_ONE,
    Phi,
    Preceq,
    ReachedZero,
    fund_seq,
    gamma,
    in_fix,
    is_successor,
    ord_canonical,
    ord_compare,
    ord_from_int,
    ord_norm,
    ord_predecessor,
    ord_validate,
    preceq_chain,
    preceq_k_bounded,
    stepdown,
    to_ordinal,
)
from ackermann_goodstein.core.terms import ZERO
from ackermann_goodstein.core.types import Order
from ackermann_goodstein.verify.sampling import random_nonzero_ordinal, random_ordinal


class TestValidate:
    """Tests for ord_validate."""

    def test_valid_terms(self, sample_ordinals):
        """Descending sums and nested terms are valid."""
        for name in ("one", "two", "omega", "phi_one", "phi_zero_of_phi_one"):
            assert ord_validate(parse_ordinal(sample_ordinals[name]))

    def test_ascending_sum(self, sample_ordinals):
        """1 + phi_1(0) is not in normal form."""
        assert not ord_validate(parse_ordinal(sample_ordinals["ascending"]))

    def test_zero(self):
        """Zero is valid."""
        assert ord_validate(ZERO)

    def test_compare_rejects_invalid(self, sample_ordinals):
        """ord_compare checks its inputs."""
        with pytest.raises(InvalidTerm):
            ord_compare(parse_ordinal(sample_ordinals["ascending"]), ORD_ONE)


class TestCompare:
    """Tests for ord_compare."""

    def test_finite(self):
        """Finite ordinals compare like numbers."""
        assert ord_compare(ord_from_int(2), ord_from_int(3)) is Order.LT
        assert ord_compare(ord_from_int(3), ord_from_int(3)) is Order.EQ

    def test_omega_above_finite(self):
        """omega is above every coefficient of 1."""
        assert ord_compare(OMEGA, ord_from_int(1000)) is Order.GT

    def test_higher_index(self):
        """phi_1(0) is above omega + 1."""
        assert ord_compare(Phi(ORD_ONE, ZERO), Phi(ZERO, ORD_ONE, 1, ORD_ONE)) is Order.GT

    def test_fixed_point_free(self):
        """phi_0(phi_1(0)) is strictly above phi_1(0)."""
        phi_one = Phi(ORD_ONE, ZERO)
        assert ord_compare(Phi(ZERO, phi_one), phi_one) is Order.GT

    def test_sampled_antisymmetry(self, rng):
        """Swapping the arguments flips the order."""
        for _ in range(200):
            x, y = random_ordinal(rng, 4), random_ordinal(rng, 4)
            assert ord_compare(x, y) == ord_compare(y, x).flip()


class TestStructure:
    """Tests for successor and limit structure."""

    def test_successor(self):
        """omega + 1 is a successor with predecessor omega."""
        term = Phi(ZERO, ORD_ONE, 1, ORD_ONE)
        assert is_successor(term)
        assert ord_predecessor(term) == OMEGA

    def test_zero_is_not_successor(self):
        """Zero and omega are not successors."""
        assert not is_successor(ZERO)
        assert not is_successor(OMEGA)

    def test_predecessor_of_limit(self):
        """Limits have no predecessor."""
        with pytest.raises(ValueError):
            ord_predecessor(OMEGA)

    def test_in_fix(self):
        """phi_1(0) is in Fix_0 but omega is not."""
        assert in_fix(ZERO, Phi(ORD_ONE, ZERO))
        assert not in_fix(ZERO, OMEGA)

    def test_canonical_merges(self):
        """Equal summands merge into a coefficient."""
        term = Phi(ZERO, ZERO, 1, Phi(ZERO, ZERO))
        assert ord_canonical(term) == ord_from_int(2)


class TestFundSeq:
    """Tests for fund_seq."""

    def test_successor(self):
        """[x](alpha + 1) = alpha."""
        assert fund_seq(ord_from_int(3), 7) == ord_from_int(2)
        assert fund_seq(ORD_ONE, 5) == ZERO

    def test_omega(self):
        """[x]omega = x."""
        assert fund_seq(OMEGA, 3) == ord_from_int(3)
        assert fund_seq(OMEGA, 0) == ZERO

    def test_phi_one(self):
        """[2]phi_1(0) iterates phi_0 twice on 1."""
        assert fund_seq(Phi(ORD_ONE, ZERO), 2) == Phi(ZERO, Phi(ZERO, ORD_ONE))

    def test_fixed_point_argument(self):
        """[3]phi_0(phi_1(0)) = phi_1(0) * 3."""
        phi_one = Phi(ORD_ONE, ZERO)
        assert fund_seq(Phi(ZERO, phi_one), 3) == Phi(ORD_ONE, ZERO, 3)

    def test_sum(self):
        """Only the last summand is expanded."""
        term = Phi(ZERO, ORD_ONE, 1, ORD_ONE)
        assert fund_seq(term, 4) == OMEGA

    def test_zero(self):
        """Zero has no fundamental sequence."""
        with pytest.raises(ZeroHasNoFS):
            fund_seq(ZERO, 2)

    def test_negative_index(self):
        """Negative positions are rejected."""
        with pytest.raises(ValueError):
            fund_seq(OMEGA, -1)

    def test_invalid(self, sample_ordinals):
        """Invalid terms are rejected."""
        with pytest.raises(InvalidTerm):
            fund_seq(parse_ordinal(sample_ordinals["ascending"]), 2)

    def test_sampled_descent(self, rng):
        """Members are valid and strictly smaller."""
        for _ in range(300):
            xi = random_nonzero_ordinal(rng, 5)
            x = rng.choice((1, 2, 3, 5))
            member = fund_seq(xi, x)
            assert ord_validate(member)
            assert ord_compare(member, xi) is Order.LT


class TestStepdown:
    """Tests for stepdown."""

    def test_omega(self):
        """<2>omega = 2, <3> = 1, <4> = 0."""
        report = stepdown(OMEGA, 10)
        assert [n for n, _ in report.steps] == [2, 3, 4]
        assert report.steps[0][1] == ord_from_int(2)
        assert report.outcome == ReachedZero(4)

    def test_zero(self):
        """Zero reaches zero at <1>."""
        assert stepdown(ZERO, 5).outcome == ReachedZero(1)

    def test_budget(self):
        """phi_1(0) does not reach zero within a few steps."""
        report = stepdown(Phi(ORD_ONE, ZERO), 3)
        assert report.outcome is BUDGET_EXCEEDED
        assert len(report.steps) == 3

    def test_value_at(self):
        """value_at reads the chain, including past the end."""
        report = stepdown(OMEGA, 10)
        assert report.value_at(1) == OMEGA
        assert report.value_at(3) == ORD_ONE
        assert report.value_at(9) == ZERO
        assert stepdown(Phi(ORD_ONE, ZERO), 2).value_at(9) is None


class TestPreceq:
    """Tests for the k-step relation."""

    def test_holds(self):
        """2 <=_2 omega since [2]omega = 2."""
        verdict, chain = preceq_chain(ord_from_int(2), OMEGA, 2, 10)
        assert verdict is Preceq.HOLDS
        assert chain == [OMEGA, ord_from_int(2)]

    def test_longer_chain(self):
        """2 <=_3 omega through 3."""
        assert preceq_k_bounded(ord_from_int(2), OMEGA, 3, 10) is Preceq.HOLDS

    def test_fails(self):
        """3 is skipped by the [2] chain below omega."""
        assert preceq_k_bounded(ord_from_int(3), OMEGA, 2, 10) is Preceq.FAILS

    def test_budget(self):
        """A zero step cap cannot walk anywhere."""
        assert preceq_k_bounded(ZERO, OMEGA, 2, 0) is Preceq.BUDGET_EXCEEDED


class TestBaseOmega:
    """Tests for to_ordinal, gamma and norms."""

    def test_to_ordinal(self):
        """A_a(b) maps to phi_a(b)."""
        assert print_ordinal(to_ordinal(normal_form(4, 2))) == "phi(phi(0,0),0)"
        assert to_ordinal(normal_form(3, 2)) == Phi(ZERO, ORD_ONE, 1, ORD_ONE)

    def test_gamma(self):
        """gamma_2 = phi(phi(0,0),0)."""
        assert gamma(0) == ZERO
        assert gamma(1) == ORD_ONE
        assert print_ordinal(gamma(2)) == "phi(phi(0,0),0)"

    def test_seed_images(self):
        """The images of 1 and 4 are gamma_1 and gamma_2."""
        assert to_ordinal(normal_form(1, 2)) == gamma(1)
        assert to_ordinal(normal_form(4, 2)) == gamma(2)

    def test_norm(self):
        """||phi_0(0) * 2|| = 5, matching the term norm."""
        assert ord_norm(ord_from_int(2)) == 5
