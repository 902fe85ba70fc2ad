"""Matroid kernel over explicit basis families on the ordered ground set [n].

Subsets of [n] travel as bit masks (bit i-1 holds element i), so membership,
intersection and symmetric-difference tests stay cheap inside the exhaustive
scans used by the oracles and the census.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


def mask_of(members: Iterable[int], n: int) -> int:
    """Pack a subset of [n] into a bit mask, rejecting bad elements."""
    m = 0
    for x in members:
        x = int(x)
        if not 1 <= x <= n:
            raise ValueError(f"element {x} outside ground set [1, {n}]")
        bit = 1 << (x - 1)
        if m & bit:
            raise ValueError(f"repeated element {x}")
        m |= bit
    return m


def members_of(mask: int) -> tuple[int, ...]:
    """Unpack a bit mask into its sorted member tuple."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@lru_cache(maxsize=None)
def k_subset_masks(n: int, k: int) -> tuple[int, ...]:
    """Masks of every k-element subset of [n], in ascending mask order."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"no {k}-subsets on ground set [{n}]")
    masks = []
    for combo in itertools.combinations(range(n), k):
        m = 0
        for p in combo:
            m |= 1 << p
        masks.append(m)
    return tuple(sorted(masks))


@dataclass(frozen=True)
class KSubset:
    """A subset of the ground set [n], stored as a bit mask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground size must be positive")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError("mask holds elements outside the ground set")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "KSubset":
        return cls(n, mask_of(members, n))

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and self.mask >> (x - 1) & 1 == 1

    def __repr__(self) -> str:
        inner = "{" + ",".join(map(str, self.members)) + "}"
        return f"KSubset({self.n}, {inner})"


def as_mask(subset, n: int) -> int:
    """Coerce a KSubset or an iterable of elements to a mask over [n]."""
    if isinstance(subset, KSubset):
        if subset.n != n:
            raise ValueError(f"subset lives on [{subset.n}], expected [{n}]")
        return subset.mask
    return mask_of(subset, n)


@dataclass(frozen=True)
class Matroid:
    """Matroid on [n] of rank k given by the full family of basis masks.

    Equality is plain field equality, so two matroids agree exactly when they
    share the ground size, the rank, and the basis family.
    """

    n: int
    k: int
    bases: frozenset[int]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground size must be positive")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"rank {self.k} outside [0, {self.n}]")
        if not self.bases:
            raise ValueError("basis family is empty")
        top = 1 << self.n
        for b in self.bases:
            if not 0 <= b < top:
                raise ValueError("basis mask outside the ground set")
            if b.bit_count() != self.k:
                raise ValueError("basis size differs from the rank")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable) -> "Matroid":
        masks = frozenset(as_mask(s, n) for s in sets)
        if not masks:
            raise ValueError("basis family is empty")
        k = next(iter(masks)).bit_count()
        return cls(n, k, masks)

    def basis_subsets(self) -> tuple[KSubset, ...]:
        return tuple(KSubset(self.n, m)
                     for m in sorted(self.bases, key=members_of))

    def has_basis(self, subset) -> bool:
        return as_mask(subset, self.n) in self.bases

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "bases": sorted(list(members_of(b)) for b in self.bases),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Matroid":
        n = int(data["n"])
        return cls(n, int(data["k"]),
                   frozenset(mask_of(b, n) for b in data["bases"]))


@dataclass(frozen=True)
class CircuitHyperplaneSet:
    """Subsets that are simultaneously circuits and hyperplanes of a matroid;
    for a sparse paving matroid these are exactly the k-sets missing from the
    basis family."""

    n: int
    k: int
    sets: frozenset[KSubset]

    def masks(self) -> frozenset[int]:
        return frozenset(s.mask for s in self.sets)


def check_exchange_axiom(family: Iterable, n: int) -> bool:
    """Basis exchange test: for distinct B, B' and every e in B - B' some
    e' in B' - B puts (B - e) + e' back in the family."""
    masks = [as_mask(s, n) for s in family]
    if not masks:
        raise ValueError("empty family")
    if len({m.bit_count() for m in masks}) != 1:
        raise ValueError("family mixes subset sizes")
    return _exchange_masks(frozenset(masks))


def _exchange_masks(masks: frozenset[int]) -> bool:
    for b in masks:
        for bp in masks:
            if b == bp:
                continue
            give = b & ~bp
            take = bp & ~b
            g = give
            while g:
                e = g & -g
                g ^= e
                stripped = b ^ e
                t = take
                while t:
                    ep = t & -t
                    t ^= ep
                    if (stripped | ep) in masks:
                        break
                else:
                    return False
    return True


def _independent(mask: int, bases: frozenset[int]) -> bool:
    return any(mask & ~b == 0 for b in bases)


def rank_of(m: Matroid, subset) -> int:
    """Largest overlap of the given subset with any basis."""
    a = as_mask(subset, m.n)
    return max((a & b).bit_count() for b in m.bases)


def circuits(m: Matroid) -> frozenset[KSubset]:
    """All minimal dependent subsets; their sizes never exceed k+1."""
    found = []
    for size in range(1, min(m.k + 1, m.n) + 1):
        for mask in k_subset_masks(m.n, size):
            if _independent(mask, m.bases):
                continue
            sub = mask
            minimal = True
            while sub:
                low = sub & -sub
                sub ^= low
                if not _independent(mask ^ low, m.bases):
                    minimal = False
                    break
            if minimal:
                found.append(mask)
    return frozenset(KSubset(m.n, f) for f in found)


def hyperplanes(m: Matroid) -> frozenset[KSubset]:
    """Flats of rank k-1: every strict superset must gain rank."""
    if m.k < 1:
        raise ValueError("a rank-0 matroid has no hyperplanes")
    full = (1 << m.n) - 1
    memo: dict[int, int] = {}

    def rk(a: int) -> int:
        r = memo.get(a)
        if r is None:
            r = max((a & b).bit_count() for b in m.bases)
            memo[a] = r
        return r

    out = []
    for mask in range(full + 1):
        if rk(mask) != m.k - 1:
            continue
        rest = full & ~mask
        flat = True
        while rest:
            g = rest & -rest
            rest ^= g
            if rk(mask | g) == m.k - 1:
                flat = False
                break
        if flat:
            out.append(mask)
    return frozenset(KSubset(m.n, f) for f in out)


def circuit_hyperplanes(m: Matroid) -> CircuitHyperplaneSet:
    common = circuits(m) & hyperplanes(m)
    return CircuitHyperplaneSet(m.n, m.k, frozenset(common))


def dual(m: Matroid) -> Matroid:
    """Matroid of rank n-k whose bases are the complements of m's bases."""
    full = (1 << m.n) - 1
    return Matroid(m.n, m.n - m.k, frozenset(full ^ b for b in m.bases))


def relax(m: Matroid, subset) -> Matroid:
    """Add a circuit-hyperplane to the basis family; the result is again a
    matroid."""
    c = as_mask(subset, m.n)
    if m.k >= 1:
        ch = circuit_hyperplanes(m).masks()
    else:
        ch = frozenset()
    if c not in ch:
        raise ValueError("set is not a circuit-hyperplane; cannot relax")
    return Matroid(m.n, m.k, m.bases | {c})


def is_paving(m: Matroid) -> bool:
    """True when every circuit has size at least the rank, i.e. every subset
    smaller than the rank is independent."""
    if m.k == 0:
        return True
    return all(_independent(mask, m.bases)
               for mask in k_subset_masks(m.n, m.k - 1))


def is_sparse_paving(m: Matroid, full_check: bool = True) -> bool:
    """Sparse paving verdict via the symmetric-difference test: all missing
    k-sets are pairwise at distance >= 4.

    With full_check the circuit-hyperplane characterization and the
    relax-to-uniform ladder are evaluated too, and a disagreement raises,
    since the three tests provably coincide on matroids.
    """
    everything = k_subset_masks(m.n, m.k)
    nonbases = [x for x in everything if x not in m.bases]
    verdict = all((a ^ b).bit_count() >= 4
                  for a, b in itertools.combinations(nonbases, 2))
    if full_check:
        if m.k == 0:
            ch = frozenset()
        else:
            ch = circuit_hyperplanes(m).masks()
        by_ch = ch == frozenset(nonbases)
        ladder = m
        for c in sorted(ch):
            ladder = relax(ladder, KSubset(m.n, c))
        by_relax = ladder.bases == frozenset(everything)
        if not (verdict == by_ch == by_relax):
            raise RuntimeError("internal: sparse paving definitions disagree")
    return verdict


def uniform(k: int, n: int) -> Matroid:
    """Matroid whose bases are all k-subsets of [n]."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    return Matroid(n, k, frozenset(k_subset_masks(n, k)))
