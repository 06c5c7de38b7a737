"""Tests for sandwiching, normal forms, evaluation, base change and validation."""

import importlib

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ackermann_goodstein.config import get_settings
from ackermann_goodstein.core.errors import BadBases, BaseTooSmall, ZeroInput, ZeroTerm
from ackermann_goodstein.core.grammar import parse_term, print_ordinal, print_term
from ackermann_goodstein.core.normal_form import (
    VALID,
    Invalid,
    NFClass,
    SandwichStep,
    base_change,
    base_change_value,
    classify,
    eval_term,
    is_extended_normal,
    is_normal_block,
    normal_form,
    omega_image,
    sandwich,
    term_compare,
    term_sandwich,
    validate_nf,
)
from ackermann_goodstein.core.ordinal import ord_order, to_ordinal
from ackermann_goodstein.core.terms import ONE, ZERO, Node
from ackermann_goodstein.core.types import EXCEEDED, Order, Value


class TestSandwich:
    """Tests for sandwich."""

    def test_sixteen(self):
        """16 = A_0(2, A_1(2, 0)) is reached through 4."""
        seq = sandwich(16, 2)
        assert seq.steps == (SandwichStep(1, 0, 4), SandwichStep(0, 4, 16))
        assert seq.penum == 4
        assert seq.values == (0, 4, 16)

    def test_one(self):
        """1 = A_0(k, 0) in every base."""
        for k in (2, 3, 7):
            assert sandwich(1, k).steps == (SandwichStep(0, 0, 1),)
            assert sandwich(1, k).penum == 0

    def test_twenty_one(self):
        """21 has the same sandwich as 16."""
        assert sandwich(21, 2).last == SandwichStep(0, 4, 16)

    def test_base_three(self):
        """3 ** 27 = A_1(3, 0)."""
        assert sandwich(3**27, 3).steps == (SandwichStep(1, 0, 3**27),)
        assert sandwich(3**27 - 1, 3).last == SandwichStep(0, 26, 3**26)

    def test_tower(self):
        """2 ** 65537 sandwiches through A_1(2, 1) = 2 ** 16."""
        seq = sandwich(2**65537, 2)
        assert [(s.index, s.arg) for s in seq] == [(1, 1), (0, 65537)]
        assert seq.penum == 65536

    def test_zero(self):
        """0 has no sandwich."""
        with pytest.raises(ZeroInput):
            sandwich(0, 2)

    def test_bad_base(self):
        """Bases below 2 are rejected."""
        with pytest.raises(BaseTooSmall):
            sandwich(5, 1)

    def test_ordering(self):
        """Indices fall and arguments sit between consecutive values."""
        for m in (5, 100, 65537, 10**6):
            seq = sandwich(m, 2)
            values = seq.values
            for i, step in enumerate(seq.steps):
                assert values[i] <= step.arg < step.value <= m
                if i > 0:
                    assert seq.steps[i - 1].index > step.index


class TestNormalForm:
    """Tests for normal_form."""

    def test_zero(self):
        """0 is the empty sum."""
        assert normal_form(0, 2) == ZERO

    def test_small_numbers(self, sample_terms):
        """Base-2 normal forms of small numbers."""
        assert print_term(normal_form(1, 2)) == sample_terms["one"]
        assert print_term(normal_form(2, 2)) == sample_terms["two"]
        assert print_term(normal_form(3, 2)) == sample_terms["three"]
        assert print_term(normal_form(4, 2)) == sample_terms["four"]
        assert print_term(normal_form(8, 2)) == sample_terms["eight"]
        assert print_term(normal_form(16, 2)) == sample_terms["sixteen"]

    def test_twenty_one(self, sample_terms):
        """21 = A_0(A_1 0) + A_1 0 + 1 in base 2."""
        assert print_term(normal_form(21, 2)) == sample_terms["twenty_one"]

    def test_coefficient_below_base(self):
        """Digits in base 3 become coefficients."""
        assert normal_form(2, 3) == Node(ZERO, ZERO, 2)
        assert normal_form(3, 3) == Node(ZERO, ONE)

    def test_tower(self):
        """2 ** 65537 = A_0(A_1(1) + 1)."""
        assert print_term(normal_form(2**65537, 2)) == "A(0,A(A(0,0),A(0,0))+A(0,0))"

    def test_negative(self):
        """Negative numbers are rejected."""
        with pytest.raises(ValueError):
            normal_form(-1, 2)

    @pytest.mark.property_based
    @given(m=st.integers(min_value=0, max_value=5000), k=st.integers(min_value=2, max_value=5))
    @settings(max_examples=200, deadline=None)
    def test_evaluates_back(self, m, k):
        """Normal forms evaluate to their number."""
        assert eval_term(normal_form(m, k), k) == Value(m)

    @pytest.mark.property_based
    @given(
        m=st.integers(min_value=0, max_value=3000),
        n=st.integers(min_value=0, max_value=3000),
        k=st.integers(min_value=2, max_value=4),
    )
    @settings(max_examples=200, deadline=None)
    def test_omega_image_preserves_order(self, m, n, k):
        """m < n iff the base-omega image of m is below that of n."""
        assert ord_order(omega_image(m, k), omega_image(n, k)) is Order.of(m, n)


class TestEvalTerm:
    """Tests for eval_term."""

    def test_values(self, sample_terms):
        """Sample terms evaluate as named in base 2."""
        assert eval_term(parse_term(sample_terms["sixteen"]), 2) == Value(16)
        assert eval_term(parse_term(sample_terms["twenty_one"]), 2) == Value(21)
        assert eval_term(parse_term(sample_terms["unmerged_two"]), 2) == Value(2)

    def test_big_term_base_two(self, sample_terms):
        """A_1(2, 1) + 1 = 65537."""
        assert eval_term(parse_term(sample_terms["big"]), 2) == Value(65537)

    def test_big_term_base_three(self, sample_terms):
        """A_1(3, 1) + 1 exceeds any desk budget."""
        assert eval_term(parse_term(sample_terms["big"]), 3) is EXCEEDED

    def test_digit_cap_on_sum(self, small_budget):
        """Sums are capped as well as single values."""
        term = Node(ZERO, normal_form(160, 2), 1000)
        assert eval_term(term, 2, small_budget) is EXCEEDED


class TestClassify:
    """Tests for classify and term_sandwich."""

    def test_case_a(self):
        """A zero argument is case A."""
        assert classify(normal_form(4, 2), 2) is NFClass.CASE_A

    def test_case_b(self):
        """16 = A_0(4) with 4 = penum is case B."""
        assert classify(normal_form(16, 2), 2) is NFClass.CASE_B

    def test_case_c(self):
        """2 = A_0(1) with penum 0 is case C."""
        assert classify(normal_form(2, 2), 2) is NFClass.CASE_C

    def test_zero(self):
        """Zero cannot be classified."""
        with pytest.raises(ZeroTerm):
            classify(ZERO, 2)

    def test_term_sandwich_matches_numbers(self):
        """Symbolic steps evaluate to the numeric sandwich of 16."""
        steps = term_sandwich(normal_form(16, 2))
        assert [(eval_term(s.index, 2), eval_term(s.arg, 2)) for s in steps] == [
            (Value(1), Value(0)),
            (Value(0), Value(4)),
        ]

    def test_term_sandwich_cache_size(self):
        """The symbolic sandwich cache is sized like the normal form cache."""
        term_sandwich(normal_form(16, 2))
        module = importlib.import_module("ackermann_goodstein.core.normal_form")
        cached = module._term_sandwich_cached
        assert cached is not None
        assert cached.cache_info().maxsize == get_settings().nf_cache_size


class TestBaseChange:
    """Tests for base change."""

    def test_identity_on_syntax(self):
        """Terms carry no base, so the syntax is unchanged."""
        term = normal_form(21, 2)
        assert base_change(term, 2, 3) is term

    def test_four(self):
        """<4>(2 -> 3) = A_1(3, 0) = 3 ** 27."""
        assert base_change_value(4, 2, 3) == Value(3**27)

    def test_three(self):
        """<3>(2 -> 3) = 3 + 1."""
        assert base_change_value(3, 2, 3) == Value(4)

    def test_small_numbers_below_base(self):
        """Numbers below the base are fixed."""
        assert base_change_value(1, 2, 5) == Value(1)
        assert base_change_value(2, 3, 4) == Value(2)

    def test_must_go_up(self):
        """The target base must exceed the source base."""
        with pytest.raises(BadBases):
            base_change(ONE, 3, 3)

    def test_omega(self):
        """16 goes to phi_0(phi_1(0))."""
        assert print_ordinal(omega_image(16, 2)) == "phi(0,phi(phi(0,0),0))"
        assert omega_image(0, 2) == ZERO


class TestTermCompare:
    """Tests for term_compare."""

    def test_orders_by_value(self):
        """Normal forms compare like their values."""
        assert term_compare(normal_form(5, 2), normal_form(16, 2)) is Order.LT
        assert term_compare(normal_form(16, 2), normal_form(5, 2)) is Order.GT
        assert term_compare(normal_form(7, 2), normal_form(7, 2)) is Order.EQ

    def test_symbolic(self, sample_terms):
        """A_1(1) + 1 is above A_1(0) * 2 without evaluation."""
        big = parse_term(sample_terms["big"])
        assert term_compare(big, Node(ONE, ZERO, 2)) is Order.GT


class TestIsNormalBlock:
    """Tests for is_normal_block and is_extended_normal."""

    def test_concrete_normal(self):
        """A_0(A_1 0) = 16 is a normal block in base 2."""
        assert is_normal_block(ZERO, normal_form(4, 2), 2) is True

    def test_concrete_not_normal(self):
        """A_0(16) = 2 ** 16 = A_1(1) is not normal as written."""
        assert is_normal_block(ZERO, normal_form(16, 2), 2) is False

    def test_symbolic_normal(self):
        """A_1(3, 1) is normal without being evaluated."""
        assert is_normal_block(ONE, ONE, 3) is True

    def test_zero_argument(self):
        """A_a(0) is always normal."""
        assert is_normal_block(normal_form(5, 2), ZERO, 2) is True

    def test_extended_coefficient_in_base_two(self):
        """A_0(b) * 2 is never normal in base 2."""
        assert is_extended_normal(ZERO, ONE, 2, ZERO, 2) is False
        assert is_extended_normal(ZERO, ONE, 1, ZERO, 2) is True

    def test_extended_tail_must_be_smaller(self):
        """The tail has to lie below the block."""
        assert is_extended_normal(ZERO, ZERO, 1, ONE, 3) is False


class TestValidate:
    """Tests for validate_nf."""

    def test_valid(self, sample_terms):
        """Normal forms validate."""
        assert validate_nf(parse_term(sample_terms["twenty_one"]), 2) is VALID
        assert validate_nf(parse_term(sample_terms["four"]), 2) is VALID

    def test_unmerged_sum(self, sample_terms):
        """1 + 1 is not the normal form of 2."""
        result = validate_nf(parse_term(sample_terms["unmerged_two"]), 2)
        assert isinstance(result, Invalid)
        assert "A(0,A(0,0))" in result.reason

    def test_coefficient_at_base(self):
        """A coefficient equal to the base is invalid."""
        assert isinstance(validate_nf(Node(ZERO, ZERO, 2), 2), Invalid)

    def test_big_term_base_two(self, sample_terms):
        """A_1(2, 1) + 1 is the normal form of 65537."""
        assert validate_nf(parse_term(sample_terms["big"]), 2) is VALID

    def test_big_term_base_three(self, sample_terms):
        """A_1(3, 1) + 1 validates symbolically in base 3."""
        assert validate_nf(parse_term(sample_terms["big"]), 3) is VALID

    def test_zero(self):
        """Zero is its own normal form."""
        assert validate_nf(ZERO, 2) is VALID

    def test_base_change_preserves_normality(self):
        """Base-2 normal forms stay normal read in base 3."""
        for m in (4, 16, 21, 100, 65537):
            term = base_change(normal_form(m, 2), 2, 3)
            assert validate_nf(term, 3) is VALID
