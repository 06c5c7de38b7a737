"""Sampled and exhaustive checks of the toolkit's invariants."""

from ackermann_goodstein.verify.sampling import (
    BELOW_PHI_2,
    random_nonzero_ordinal,
    random_ordinal,
    random_small_ordinal,
)
from ackermann_goodstein.verify.suites import (
    SUITES,
    CaseFailure,
    CaseSkipped,
    Suite,
    run_suite,
)

__all__ = [
    # Sampling
    "BELOW_PHI_2",
    "random_ordinal",
    "random_nonzero_ordinal",
    "random_small_ordinal",
    # Suites
    "SUITES",
    "Suite",
    "CaseFailure",
    "CaseSkipped",
    "run_suite",
]
