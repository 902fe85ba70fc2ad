"""Grassmann necklaces, cyclic Gale orders, and shifted Schubert matroids.

Index arithmetic is 1-based and wraps modulo n with representatives in [n],
so the successor of n is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .matroid import KSubset, Matroid, k_subset_masks, members_of


def mod1(i: int, n: int) -> int:
    """Reduce i modulo n into the representative range 1..n."""
    return (i - 1) % n + 1


def cyclic_pos(t: int, x: int, n: int) -> int:
    """Position of x in the rotation t, t+1, ..., n, 1, ..., t-1 of [n]."""
    return (x - t) % n


def cyclic_le(t: int, a: int, b: int, n: int) -> bool:
    """Whether a comes no later than b in the rotation of [n] starting at t."""
    for v in (t, a, b):
        if not 1 <= v <= n:
            raise ValueError(f"{v} outside [1, {n}]")
    return cyclic_pos(t, a, n) <= cyclic_pos(t, b, n)


def gale_le(t: int, i_set: KSubset, j_set: KSubset) -> bool:
    """Componentwise comparison of two equal-size subsets, each sorted by the
    rotation of [n] starting at t."""
    if i_set.n != j_set.n:
        raise ValueError("subsets live on different ground sets")
    n = i_set.n
    if not 1 <= t <= n:
        raise ValueError(f"rotation start {t} outside [1, {n}]")
    if len(i_set) != len(j_set):
        raise ValueError("subsets differ in size")
    a = _sorted_positions(n, t, i_set.mask)
    b = _sorted_positions(n, t, j_set.mask)
    return all(x <= y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _sorted_positions(n: int, t: int, mask: int) -> tuple[int, ...]:
    return tuple(sorted((x - t) % n for x in members_of(mask)))


def cyclic_interval(k: int, n: int, i: int) -> KSubset:
    """The k consecutive elements i, i+1, ... taken cyclically in [n]; this is
    the smallest k-subset for the rotation starting at i."""
    if not 1 <= k <= n:
        raise ValueError(f"interval length {k} outside [1, {n}]")
    if not 1 <= i <= n:
        raise ValueError(f"interval start {i} outside [1, {n}]")
    return KSubset.of(n, (mod1(i + d, n) for d in range(k)))


def bumped_interval(k: int, n: int, i: int) -> KSubset:
    """Cyclic interval at i with its last element pushed one step further;
    the second-smallest k-subset for the rotation starting at i."""
    base = cyclic_interval(k, n, i).mask
    drop = 1 << (mod1(i + k - 1, n) - 1)
    add = 1 << (mod1(i + k, n) - 1)
    return KSubset(n, (base ^ drop) | add)


def schubert_bases(i_set: KSubset, t: int, n: int) -> frozenset[KSubset]:
    """Bases of the cyclically shifted Schubert matroid: every subset of the
    same size that dominates i_set in the Gale order at t."""
    if i_set.n != n:
        raise ValueError(f"subset lives on [{i_set.n}], expected [{n}]")
    if not 1 <= t <= n:
        raise ValueError(f"rotation start {t} outside [1, {n}]")
    ref = _sorted_positions(n, t, i_set.mask)
    out = []
    for m in k_subset_masks(n, len(i_set)):
        cand = _sorted_positions(n, t, m)
        if all(x <= y for x, y in zip(ref, cand)):
            out.append(m)
    return frozenset(KSubset(n, m) for m in out)


def _structure_problem(entries: Sequence[KSubset]) -> str | None:
    n = len(entries)
    if n == 0:
        return "no entries"
    if any(e.n != n for e in entries):
        return "entry ground size differs from the entry count"
    k = len(entries[0])
    if any(len(e) != k for e in entries):
        return "entries mix sizes"
    return None


def _axiom_problem(entries: Sequence[KSubset]) -> str | None:
    n = len(entries)
    for i in range(1, n + 1):
        cur = entries[i - 1].mask
        nxt = entries[i % n].mask
        bit = 1 << (i - 1)
        if cur & bit:
            if (cur ^ bit) & ~nxt:
                return (f"necklace axiom fails at i={i}: the next entry must "
                        f"contain the current one minus {{{i}}}")
        else:
            if cur != nxt:
                return (f"necklace axiom fails at i={i}: {i} is absent so the "
                        f"next entry must repeat")
    return None


def necklace_violation(entries: Sequence[KSubset]) -> str | None:
    """First broken necklace condition, or None when the sequence is valid."""
    return _structure_problem(entries) or _axiom_problem(entries)


def is_valid_necklace(entries: Sequence[KSubset]) -> bool:
    """Whether the insertion/deletion condition holds at every index mod n.

    Structural defects (wrong length, mixed sizes) raise instead of
    returning False.
    """
    problem = _structure_problem(entries)
    if problem is not None:
        raise ValueError(problem)
    return _axiom_problem(entries) is None


@dataclass(frozen=True)
class GrassmannNecklace:
    """Cyclic sequence (I_1, ..., I_n) of k-subsets obeying the necklace
    condition; construction validates it."""

    n: int
    k: int
    entries: tuple[KSubset, ...]

    def __post_init__(self):
        if len(self.entries) != self.n:
            raise ValueError("entry count must equal the ground size")
        if any(e.n != self.n for e in self.entries):
            raise ValueError("entry ground size differs from n")
        if any(len(e) != self.k for e in self.entries):
            raise ValueError("entry size differs from k")
        problem = _axiom_problem(self.entries)
        if problem is not None:
            raise ValueError(problem)

    @classmethod
    def of(cls, n: int, sets: Sequence[Iterable[int]]) -> "GrassmannNecklace":
        entries = tuple(s if isinstance(s, KSubset) else KSubset.of(n, s)
                        for s in sets)
        if not entries:
            raise ValueError("no entries")
        return cls(n, len(entries[0]), entries)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k,
                "entries": [list(e.members) for e in self.entries]}

    @classmethod
    def from_dict(cls, data: dict) -> "GrassmannNecklace":
        n = int(data["n"])
        neck = cls.of(n, [KSubset.of(n, e) for e in data["entries"]])
        if neck.k != int(data["k"]):
            raise ValueError("declared k differs from the entry size")
        return neck


@dataclass(frozen=True)
class NonAdjacentSet:
    """Subset of the cyclic ground set [n] in which no two distinct elements
    are consecutive modulo n."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground size must be positive")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError("mask holds elements outside the ground set")
        if not nonadjacent_mask_ok(self.mask, self.n):
            raise ValueError("set contains cyclically adjacent elements")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "NonAdjacentSet":
        m = 0
        for x in members:
            x = int(x)
            if not 1 <= x <= n:
                raise ValueError(f"element {x} outside ground set [1, {n}]")
            m |= 1 << (x - 1)
        return cls(n, m)

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and self.mask >> (x - 1) & 1 == 1

    def to_dict(self) -> dict:
        return {"n": self.n, "members": list(self.members)}

    @classmethod
    def from_dict(cls, data: dict) -> "NonAdjacentSet":
        return cls.of(int(data["n"]), data["members"])


def nonadjacent_mask_ok(mask: int, n: int) -> bool:
    """Non-adjacency for masks: no two distinct elements of the set are
    cyclic neighbours.  On the one-element ground set the singleton counts,
    since it has no distinct neighbour."""
    if n == 1:
        return True
    rot = ((mask << 1) | (mask >> (n - 1))) & ((1 << n) - 1)
    return mask & rot == 0


def necklace_to_positroid(neck: GrassmannNecklace) -> Matroid:
    """Intersect the n shifted Schubert matroids read off the necklace."""
    n, k = neck.n, neck.k
    keep = list(k_subset_masks(n, k))
    for t in range(1, n + 1):
        ref = _sorted_positions(n, t, neck.entries[t - 1].mask)
        keep = [m for m in keep
                if all(x <= y
                       for x, y in zip(ref, _sorted_positions(n, t, m)))]
    return Matroid(n, k, frozenset(keep))


def positroid_necklace(m: Matroid) -> GrassmannNecklace:
    """Necklace whose t-th entry is the basis that is lexicographically least
    after rotating labels so that t becomes 1."""
    entries = []
    for t in range(1, m.n + 1):
        best = min(m.bases, key=lambda b: _sorted_positions(m.n, t, b))
        entries.append(KSubset(m.n, best))
    return GrassmannNecklace(m.n, m.k, tuple(entries))


def is_positroid(m: Matroid) -> bool:
    """Whether the matroid is recovered from its own necklace."""
    return necklace_to_positroid(positroid_necklace(m)).bases == m.bases


def sparse_paving_witness(neck: GrassmannNecklace) -> NonAdjacentSet | None:
    """Decide sparse paving at the necklace level.

    The positroid is sparse paving exactly when every entry that deviates from
    its cyclic interval is the bumped interval and both neighbouring entries
    are untouched.  Returns the deviation set, which indexes the
    circuit-hyperplanes, or None when the test fails.
    """
    n, k = neck.n, neck.k
    if not 2 <= k <= n - 2:
        raise ValueError(
            f"classification needs 2 <= k <= n-2, got k={k}, n={n}")
    deviating = [i for i in range(1, n + 1)
                 if neck.entries[i - 1].mask != cyclic_interval(k, n, i).mask]
    for i in deviating:
        before = mod1(i - 1, n)
        after = mod1(i + 1, n)
        if neck.entries[before - 1].mask != cyclic_interval(k, n, before).mask:
            return None
        if neck.entries[after - 1].mask != cyclic_interval(k, n, after).mask:
            return None
        if neck.entries[i - 1].mask != bumped_interval(k, n, i).mask:
            return None
    return NonAdjacentSet.of(n, deviating)


def necklace_from_nonadjacent(a, k: int, n: int) -> GrassmannNecklace:
    """Necklace of the sparse paving positroid indexed by a non-adjacent set:
    bumped intervals at the chosen indices, cyclic intervals elsewhere."""
    if not 2 <= k <= n - 2:
        raise ValueError(
            f"classification needs 2 <= k <= n-2, got k={k}, n={n}")
    ns = a if isinstance(a, NonAdjacentSet) else NonAdjacentSet.of(n, a)
    if ns.n != n:
        raise ValueError(f"set lives on [{ns.n}], expected [{n}]")
    entries = tuple(bumped_interval(k, n, i) if i in ns
                    else cyclic_interval(k, n, i)
                    for i in range(1, n + 1))
    return GrassmannNecklace(n, k, entries)


def all_necklaces(k: int, n: int) -> Iterator[GrassmannNecklace]:
    """Depth-first enumeration of every necklace of the given type."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"no necklaces for k={k}, n={n}")

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        cur = prefix[-1]
        if i == n:
            first = prefix[0]
            bit = 1 << (n - 1)
            if cur & bit:
                if not (cur ^ bit) & ~first:
                    yield tuple(prefix)
            else:
                if cur == first:
                    yield tuple(prefix)
            return
        bit = 1 << (i - 1)
        if not cur & bit:
            prefix.append(cur)
            yield from extend(prefix)
            prefix.pop()
            return
        stripped = cur ^ bit
        for j in range(n):
            jb = 1 << j
            if jb & stripped:
                continue
            prefix.append(stripped | jb)
            yield from extend(prefix)
            prefix.pop()

    for first in k_subset_masks(n, k):
        for masks in extend([first]):
            yield GrassmannNecklace(
                n, k, tuple(KSubset(n, m) for m in masks))
