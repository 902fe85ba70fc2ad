"""Decorated permutations and their correspondence with Grassmann necklaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .matroid import KSubset
from .necklace import (
    GrassmannNecklace,
    NonAdjacentSet,
    cyclic_pos,
    mod1,
)


@dataclass(frozen=True)
class DecoratedPermutation:
    """Permutation of [n] in one-line notation with every fixed point marked
    +1 or -1.  Marks are stored sorted by position so equality is canonical."""

    n: int
    perm: tuple[int, ...]
    colors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1 or len(self.perm) != self.n:
            raise ValueError("one-line length differs from n")
        if sorted(self.perm) != list(range(1, self.n + 1)):
            raise ValueError("not a permutation of [n]")
        fixed = {i for i in range(1, self.n + 1) if self.perm[i - 1] == i}
        keys = [i for i, _ in self.colors]
        if len(set(keys)) != len(keys) or set(keys) != fixed:
            raise ValueError("marks must cover exactly the fixed points")
        if any(c not in (-1, 1) for _, c in self.colors):
            raise ValueError("marks must be +1 or -1")
        if list(self.colors) != sorted(self.colors):
            raise ValueError("marks must be sorted by position")

    @classmethod
    def make(cls, perm: Iterable[int],
             colors: Mapping[int, int] | None = None) -> "DecoratedPermutation":
        line = tuple(int(x) for x in perm)
        marks = tuple(sorted((int(i), int(c))
                             for i, c in (colors or {}).items()))
        return cls(len(line), line, marks)

    def apply(self, i: int) -> int:
        return self.perm[i - 1]

    def preimage(self, j: int) -> int:
        return self.perm.index(j) + 1

    @property
    def colors_dict(self) -> dict[int, int]:
        return dict(self.colors)

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.perm[i - 1] == i)

    def to_dict(self) -> dict:
        return {"n": self.n, "perm": list(self.perm),
                "colors": {str(i): c for i, c in self.colors}}

    @classmethod
    def from_dict(cls, data: dict) -> "DecoratedPermutation":
        perm = [int(x) for x in data["perm"]]
        if len(perm) != int(data["n"]):
            raise ValueError("one-line length differs from n")
        colors = {int(i): int(c) for i, c in data.get("colors", {}).items()}
        return cls.make(perm, colors)


def necklace_to_decperm(neck: GrassmannNecklace) -> DecoratedPermutation:
    """Read the permutation off consecutive entries: when i leaves the entry
    the inserted element is its image; an untouched entry makes i a fixed
    point, marked +1 when i is missing from it and -1 when present."""
    n = neck.n
    perm = [0] * n
    colors: dict[int, int] = {}
    for i in range(1, n + 1):
        cur = neck.entries[i - 1].mask
        nxt = neck.entries[i % n].mask
        bit = 1 << (i - 1)
        if not cur & bit:
            perm[i - 1] = i
            colors[i] = 1
        elif nxt == cur:
            perm[i - 1] = i
            colors[i] = -1
        else:
            inserted = nxt & ~(cur ^ bit)
            perm[i - 1] = inserted.bit_length()
    return DecoratedPermutation.make(perm, colors)


def decperm_to_necklace(dp: DecoratedPermutation, k: int) -> GrassmannNecklace:
    """Rebuild the necklace: element j belongs to the t-th entry when it
    strictly precedes its preimage in the rotation at t, or when it is a
    -1 fixed point.  The permutation determines k; a different k is an
    inconsistency."""
    n = dp.n
    inv = [0] * (n + 1)
    for i in range(1, n + 1):
        inv[dp.apply(i)] = i
    always = {i for i, c in dp.colors if c == -1}
    entries = []
    for t in range(1, n + 1):
        members = [j for j in range(1, n + 1)
                   if j in always
                   or (j != inv[j]
                       and cyclic_pos(t, j, n) < cyclic_pos(t, inv[j], n))]
        entries.append(KSubset.of(n, members))
    derived = len(entries[0])
    if any(len(e) != derived for e in entries):
        raise RuntimeError("internal: reconstructed entries mix sizes")
    if derived != k:
        raise ValueError(
            f"permutation determines rank {derived}, not {k}")
    neck = GrassmannNecklace(n, k, tuple(entries))
    if necklace_to_decperm(neck) != dp:
        raise RuntimeError("internal: necklace reconstruction broke the "
                           "round trip")
    return neck


def top_permutation(k: int, n: int,
                    fixed_color: int | None = None) -> DecoratedPermutation:
    """The shift-by-k permutation i -> i+k mod n, which belongs to the uniform
    matroid.  Only the degenerate shifts k = 0 and k = n have fixed points;
    those need an explicit mark supplied by the caller."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"shift needs 0 <= k <= n, got k={k}, n={n}")
    line = [mod1(i + k, n) for i in range(1, n + 1)]
    if k % n == 0:
        if fixed_color not in (-1, 1):
            raise ValueError("identity shift needs an explicit fixed point "
                             "mark (+1 or -1)")
        colors = {i: fixed_color for i in range(1, n + 1)}
    else:
        colors = {}
    return DecoratedPermutation.make(line, colors)


def apply_adjacent_swaps(positions,
                         dp: DecoratedPermutation) -> DecoratedPermutation:
    """Swap the one-line entries at positions i-1 and i for every listed i,
    cyclically, so position 1 trades with position n.  A non-adjacent
    position set makes the swaps commute; adjacent positions are rejected."""
    n = dp.n
    ns = (positions if isinstance(positions, NonAdjacentSet)
          else NonAdjacentSet.of(n, positions))
    if ns.n != n:
        raise ValueError(f"positions live on [{ns.n}], expected [{n}]")
    line = list(dp.perm)
    touched = set()
    for i in ns.members:
        left = i - 1 if i > 1 else n
        line[i - 1], line[left - 1] = line[left - 1], line[i - 1]
        touched.add(i)
        touched.add(left)
    old = dp.colors_dict
    colors = {}
    for i in range(1, n + 1):
        if line[i - 1] == i:
            if i in touched:
                raise ValueError(
                    f"swap creates an unmarked fixed point at {i}")
            colors[i] = old[i]
    return DecoratedPermutation.make(line, colors)


def perm_sparse_paving_witness(dp: DecoratedPermutation,
                               k: int) -> NonAdjacentSet | None:
    """Non-adjacent swap set turning the shift-by-k permutation into dp, if
    one exists; sparse paving positroids are exactly the witnessed ones and
    their permutations have no fixed points."""
    n = dp.n
    if not 2 <= k <= n - 2:
        raise ValueError(
            f"classification needs 2 <= k <= n-2, got k={k}, n={n}")
    top = top_permutation(k, n)
    candidates = []
    for i in range(1, n + 1):
        left = i - 1 if i > 1 else n
        if (dp.perm[i - 1] != top.perm[i - 1]
                and dp.perm[i - 1] == top.perm[left - 1]
                and dp.perm[left - 1] == top.perm[i - 1]):
            candidates.append(i)
    try:
        ns = NonAdjacentSet.of(n, candidates)
    except ValueError:
        return None
    return ns if apply_adjacent_swaps(ns, top) == dp else None
