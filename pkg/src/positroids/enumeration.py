"""Counting and streaming the sparse paving census.

Non-adjacent subsets of the cyclic ground set [n] obey a two-step recurrence
whose values are the Lucas numbers from n = 2 on, and they index the sparse
paving positroids of every middle rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .decorated import DecoratedPermutation, necklace_to_decperm
from .le_diagram import LeDiagram, le_from_removals
from .matroid import Matroid
from .necklace import (
    GrassmannNecklace,
    NonAdjacentSet,
    necklace_from_nonadjacent,
    necklace_to_positroid,
    nonadjacent_mask_ok,
)


def nonadjacent_subsets(n: int) -> Iterator[NonAdjacentSet]:
    """Every non-adjacent subset of [n] exactly once, ascending by bit mask
    (bit 0 holds element 1)."""
    if n < 1:
        raise ValueError("ground size must be positive")
    for mask in range(1 << n):
        if nonadjacent_mask_ok(mask, n):
            yield NonAdjacentSet(n, mask)


def count_nonadjacent(n: int) -> int:
    """Exact count of non-adjacent subsets: 1, 2, 3, 4 for n <= 3, then each
    value is the sum of the previous two."""
    if n < 0:
        raise ValueError("count needs n >= 0")
    table = (1, 2, 3, 4)
    if n < 4:
        return table[n]
    a, b = 3, 4
    for _ in range(4, n + 1):
        a, b = b, a + b
    return b


def lucas(n: int) -> int:
    """Lucas numbers 2, 1, 3, 4, 7, 11, ... with exact integers."""
    if n < 0:
        raise ValueError("Lucas numbers need n >= 0")
    if n == 0:
        return 2
    a, b = 2, 1
    for _ in range(1, n):
        a, b = b, a + b
    return b


def nearest_golden_power(n: int) -> int:
    """Nearest integer to the n-th power of the golden ratio, computed
    exactly: phi**n differs from the n-th Lucas number by (-1/phi)**n, which
    stays below one half once n >= 2, so no floating point is involved."""
    if n < 0:
        raise ValueError("needs n >= 0")
    if n == 0:
        return 1
    if n == 1:
        return 2
    return lucas(n)


@dataclass(frozen=True)
class SparsePavingPositroid:
    """All five views of one sparse paving positroid."""

    nonadjacent: NonAdjacentSet
    necklace: GrassmannNecklace
    perm: DecoratedPermutation
    diagram: LeDiagram
    matroid: Matroid


def enumerate_sparse_paving(k: int, n: int) -> Iterator[SparsePavingPositroid]:
    """Census stream: one entry per non-adjacent subset, in mask order, with
    the necklace, decorated permutation, Le-diagram and basis views."""
    if not 2 <= k <= n - 2:
        raise ValueError(f"census needs 2 <= k <= n-2, got k={k}, n={n}")
    for a in nonadjacent_subsets(n):
        neck = necklace_from_nonadjacent(a, k, n)
        yield SparsePavingPositroid(a, neck, necklace_to_decperm(neck),
                                    le_from_removals(a, k, n),
                                    necklace_to_positroid(neck))


def count_sparse_paving(k: int, n: int) -> int:
    """Number of sparse paving positroids on [n] of rank k: n+1 at the two
    extreme ranks, the non-adjacent count for every middle rank."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"counting needs 1 <= k <= n-1, got k={k}, n={n}")
    if k == 1 or k == n - 1:
        return n + 1
    return count_nonadjacent(n)


def recurrence_case(a: NonAdjacentSet) -> int:
    """Case split behind the two-step recurrence, for n >= 4: case 1 omits n
    with at most one of {1, n-1} present, case 2 keeps both 1 and n-1, case 3
    keeps n.  Cases 2 and 3 together are counted by the n-2 value, case 1 by
    the n-1 value."""
    n = a.n
    if n < 4:
        raise ValueError("the case split needs n >= 4")
    if n in a:
        return 3
    if 1 in a and (n - 1) in a:
        return 2
    return 1
