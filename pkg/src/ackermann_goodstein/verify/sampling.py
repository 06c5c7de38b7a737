"""Seeded generators of ordinal terms for sampled checks."""

import random
from functools import cmp_to_key
from typing import Optional, Sequence

from ackermann_goodstein.core.ordinal import (
    ORD_ONE,
    OBlock,
    OrdTerm,
    Phi,
    ord_from_blocks,
    ord_norm,
    ord_order,
)
from ackermann_goodstein.core.terms import ZERO

# phi_0 and phi_1 only: every term built from these stays below phi_2(0)
BELOW_PHI_2: tuple[OrdTerm, ...] = (ZERO, ORD_ONE)


def _descending(left: OBlock, right: OBlock) -> int:
    return -ord_order(Phi(left.alpha, left.beta), Phi(right.alpha, right.beta)).value


def random_ordinal(
    rng: random.Random,
    depth: int,
    width: int = 2,
    indices: Optional[Sequence[OrdTerm]] = None,
) -> OrdTerm:
    """A random valid term of nesting depth at most depth.

    Args:
        rng: Random source
        depth: Maximum nesting of phi
        width: Maximum number of distinct summands per level
        indices: If given, every phi index is drawn from this list
    """
    if depth <= 0 or rng.random() < 0.25:
        return ZERO
    items = []
    for _ in range(rng.randint(1, width)):
        if indices is None:
            alpha = random_ordinal(rng, depth - 1, width)
        else:
            alpha = rng.choice(list(indices))
        beta = random_ordinal(rng, depth - 1, width, indices)
        items.append(OBlock(alpha, beta, rng.randint(1, 3)))
    items.sort(key=cmp_to_key(_descending))
    return ord_from_blocks(items)


def random_nonzero_ordinal(
    rng: random.Random,
    depth: int,
    width: int = 2,
    indices: Optional[Sequence[OrdTerm]] = None,
) -> OrdTerm:
    """Like random_ordinal, but never zero."""
    term = random_ordinal(rng, depth, width, indices)
    return term if isinstance(term, Phi) else ORD_ONE


def random_small_ordinal(
    rng: random.Random,
    max_norm: int,
    depth: int = 3,
    indices: Optional[Sequence[OrdTerm]] = None,
) -> OrdTerm:
    """A nonzero term whose symbol norm is at most max_norm, by rejection.

    Raises:
        ValueError: If max_norm < 3, the norm of phi_0(0)
    """
    if max_norm < ord_norm(ORD_ONE):
        raise ValueError(f"no nonzero term has norm below 3, got max_norm={max_norm}")
    while True:
        term = random_nonzero_ordinal(rng, depth, indices=indices)
        if ord_norm(term) <= max_norm:
            return term
