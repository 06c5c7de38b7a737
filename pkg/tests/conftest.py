"""Pytest fixtures for Ackermann Goodstein tests."""

import random

import pytest
from typer.testing import CliRunner

from ackermann_goodstein.core.types import EvalBudget


@pytest.fixture
def budget() -> EvalBudget:
    """The default evaluation budget, independent of the environment."""
    return EvalBudget()


@pytest.fixture
def small_budget() -> EvalBudget:
    """A tight budget that makes blowups cheap to provoke."""
    return EvalBudget(max_digits=50, max_calls=10_000, max_term_size=2_000)


@pytest.fixture
def sample_terms() -> dict[str, str]:
    """Terms in the term grammar, keyed by what they denote in base 2."""
    return {
        "one": "A(0,0)",
        "two": "A(0,A(0,0))",
        "three": "A(0,A(0,0))+A(0,0)",
        "four": "A(A(0,0),0)",
        "eight": "A(A(0,0),0)*2",
        "sixteen": "A(0,A(A(0,0),0))",
        "twenty_one": "A(0,A(A(0,0),0))+A(A(0,0),0)+A(0,0)",
        "big": "A(A(0,0),A(0,0))+A(0,0)",
        "unmerged_two": "A(0,0)+A(0,0)",
    }


@pytest.fixture
def sample_ordinals() -> dict[str, str]:
    """Ordinal terms in the phi grammar."""
    return {
        "one": "phi(0,0)",
        "two": "phi(0,0)*2",
        "omega": "phi(0,phi(0,0))",
        "phi_one": "phi(phi(0,0),0)",
        "phi_zero_of_phi_one": "phi(0,phi(phi(0,0),0))",
        "ascending": "phi(0,0)+phi(phi(0,0),0)",
    }


@pytest.fixture
def rng() -> random.Random:
    """Seeded random source for sampled tests."""
    return random.Random(20240101)


@pytest.fixture
def cli_runner() -> CliRunner:
    """Typer CLI runner."""
    return CliRunner()
