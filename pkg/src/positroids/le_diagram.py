"""Le-diagrams inside a k x (n-k) box, their planar path networks, and the
bases realized by vertex-disjoint path systems.

Cells are addressed (row, col) with row 1 on top and col 1 at the left, the
usual top-left-justified Young diagram picture.  Network vertices are tagged
tuples: ("s", label) for sources, ("t", label) for sinks, ("b", row, col) for
bullets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .matroid import KSubset, Matroid, as_mask, k_subset_masks, members_of


@dataclass(frozen=True)
class LeDiagram:
    """Young-diagram shape inside a k x (n-k) box with a bullet/empty filling.

    Construction checks the shape and filling geometry only; whether the
    filling satisfies the Le condition is a separate question answered by
    is_le, so invalid fillings can be represented and diagnosed.
    """

    k: int
    n: int
    shape: tuple[int, ...]
    filling: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.k <= self.n:
            raise ValueError(f"box needs 0 <= k <= n, got k={self.k}, n={self.n}")
        if len(self.shape) > self.k:
            raise ValueError("shape has more rows than the box")
        prev = self.n - self.k
        for w in self.shape:
            if not 1 <= w <= prev:
                raise ValueError("shape must be weakly decreasing inside the box")
            prev = w
        if len(self.filling) != len(self.shape):
            raise ValueError("filling row count differs from the shape")
        for row, w in zip(self.filling, self.shape):
            if len(row) != w:
                raise ValueError("filling row width differs from the shape")

    @classmethod
    def make(cls, k: int, n: int, shape: Iterable[int],
             filling: Iterable[Iterable]) -> "LeDiagram":
        parts = [int(w) for w in shape]
        rows = [tuple(bool(x) for x in row) for row in filling]
        while parts and parts[-1] == 0:
            parts.pop()
            if len(rows) > len(parts) and not rows[-1]:
                rows.pop()
        return cls(k, n, tuple(parts), tuple(rows))

    def cell_exists(self, r: int, c: int) -> bool:
        return 1 <= r <= len(self.shape) and 1 <= c <= self.shape[r - 1]

    def has_bullet(self, r: int, c: int) -> bool:
        return self.cell_exists(r, c) and self.filling[r - 1][c - 1]

    def bullet_count(self) -> int:
        return sum(sum(row) for row in self.filling)

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "shape": list(self.shape),
                "filling": [[1 if b else 0 for b in row]
                            for row in self.filling]}

    @classmethod
    def from_dict(cls, data: dict) -> "LeDiagram":
        return cls.make(int(data["k"]), int(data["n"]),
                        data["shape"], data["filling"])


def le_violation(diag: LeDiagram) -> tuple[int, int] | None:
    """First cell breaking the Le condition: an empty cell with a bullet above
    it in its column and a bullet to its left in its row."""
    width = diag.n - diag.k
    above = [False] * (width + 1)
    for r, row in enumerate(diag.filling, 1):
        seen_left = False
        for c, bullet in enumerate(row, 1):
            if bullet:
                seen_left = True
            elif seen_left and above[c]:
                return (r, c)
        for c, bullet in enumerate(row, 1):
            if bullet:
                above[c] = True
    return None


def is_le(diag: LeDiagram) -> bool:
    """Whether the filling satisfies the Le condition at every cell."""
    return le_violation(diag) is None


@dataclass
class Boundary:
    """Southeast boundary walk of the shape: step labels 1..n split into
    sources (down-steps, tied to rows) and sinks (left-steps, tied to
    columns)."""

    sources: KSubset
    sinks: KSubset
    source_row: dict[int, int]
    sink_col: dict[int, int]


def boundary_labels(diag: LeDiagram) -> Boundary:
    """Walk the border of the shape, padded by the top and left sides of the
    box, from the box's top right corner to its bottom left corner, numbering
    the n steps in order."""
    n, k = diag.n, diag.k
    widths = list(diag.shape) + [0] * (k - len(diag.shape))
    label = 0
    col = n - k
    source_row: dict[int, int] = {}
    sink_col: dict[int, int] = {}
    for r in range(1, k + 1):
        while col > widths[r - 1]:
            label += 1
            sink_col[label] = col
            col -= 1
        label += 1
        source_row[label] = r
    while col > 0:
        label += 1
        sink_col[label] = col
        col -= 1
    return Boundary(KSubset.of(n, source_row), KSubset.of(n, sink_col),
                    source_row, sink_col)


@dataclass
class PlanarNetwork:
    """Acyclic directed network over the bullets of a Le-diagram: rows carry
    traffic leftward from the row's source, columns carry it downward into
    the column's sink."""

    n: int
    k: int
    sources: KSubset
    sinks: KSubset
    bullets: tuple[tuple[int, int], ...]
    edges: dict[tuple, tuple[tuple, ...]]
    source_row: dict[int, int]
    sink_col: dict[int, int]


def build_network(diag: LeDiagram) -> PlanarNetwork:
    """Construct the path network: each source points to the rightmost bullet
    of its row; each bullet points to the nearest bullet on its left in the
    row and to the nearest bullet below in its column, or to the column's
    sink when none intervenes.  Gaps left by empty cells are skipped."""
    bad = le_violation(diag)
    if bad is not None:
        raise ValueError(f"Le condition fails at cell {bad}")
    b = boundary_labels(diag)
    rows: dict[int, list[int]] = {}
    cols: dict[int, list[int]] = {}
    for r, row in enumerate(diag.filling, 1):
        for c, bullet in enumerate(row, 1):
            if bullet:
                rows.setdefault(r, []).append(c)
                cols.setdefault(c, []).append(r)
    edges: dict[tuple, tuple[tuple, ...]] = {}
    for label, r in b.source_row.items():
        cells = rows.get(r, [])
        edges[("s", label)] = (("b", r, cells[-1]),) if cells else ()
    sink_of_col = {c: label for label, c in b.sink_col.items()}
    for r, cs in rows.items():
        for idx, c in enumerate(cs):
            out: list[tuple] = []
            if idx > 0:
                out.append(("b", r, cs[idx - 1]))
            col_rows = cols[c]
            pos = col_rows.index(r)
            if pos + 1 < len(col_rows):
                out.append(("b", col_rows[pos + 1], c))
            else:
                out.append(("t", sink_of_col[c]))
            edges[("b", r, c)] = tuple(out)
    for label in b.sink_col:
        edges[("t", label)] = ()
    bullets = tuple(sorted((r, c) for r, cs in rows.items() for c in cs))
    return PlanarNetwork(diag.n, diag.k, b.sources, b.sinks, bullets, edges,
                         b.source_row, b.sink_col)


def _find_augmenting(succ: dict, start, goal) -> list | None:
    stack = [(start, [start])]
    seen = {start}
    while stack:
        u, path = stack.pop()
        for v in succ.get(u, ()):
            if v in seen:
                continue
            if v == goal:
                return path + [goal]
            seen.add(v)
            stack.append((v, path + [v]))
    return None


def _max_disjoint_paths(net: PlanarNetwork, starts: Iterable[int],
                        targets: Iterable[int]) -> int:
    """Maximum number of vertex-disjoint paths from the given source labels
    to the given sink labels, by unit-capacity augmentation on the split
    graph (each vertex becomes an in/out pair of capacity one)."""
    succ: dict = {}

    def add(u, v):
        succ.setdefault(u, set()).add(v)

    for v, outs in net.edges.items():
        add((v, 0), (v, 1))
        for w in outs:
            add((v, 1), (w, 0))
    for i in starts:
        add("S", (("s", i), 0))
    for j in targets:
        add((("t", j), 1), "T")
    flow = 0
    while True:
        path = _find_augmenting(succ, "S", "T")
        if path is None:
            return flow
        flow += 1
        for u, v in zip(path, path[1:]):
            succ[u].discard(v)
            succ.setdefault(v, set()).add(u)


def is_realizable(source, subset) -> bool:
    """Whether some vertex-disjoint path system realizes the subset: sources
    kept by the subset stay put, the remaining sources must route to the
    subset's sinks."""
    net = source if isinstance(source, PlanarNetwork) else build_network(source)
    s_mask = as_mask(subset, net.n)
    if s_mask.bit_count() != net.k:
        return False
    to_route = members_of(net.sources.mask & ~s_mask)
    goals = members_of(s_mask & net.sinks.mask)
    if len(to_route) != len(goals):
        return False
    if not to_route:
        return True
    return _max_disjoint_paths(net, to_route, goals) == len(to_route)


def realizable_sets(diag: LeDiagram) -> Matroid:
    """Matroid on [n] whose bases are exactly the k-subsets realized by some
    vertex-disjoint path system of the diagram's network."""
    net = build_network(diag)
    found = [m for m in k_subset_masks(diag.n, diag.k)
             if is_realizable(net, KSubset(diag.n, m))]
    return Matroid(diag.n, diag.k, frozenset(found))


@dataclass(frozen=True)
class PathSystem:
    """One path per source, pairwise vertex-disjoint; a trivial path occupies
    just its source vertex, every other path ends at a sink."""

    paths: tuple[tuple[tuple, ...], ...]

    def __post_init__(self):
        used: set = set()
        for p in self.paths:
            if not p or p[0][0] != "s":
                raise ValueError("each path must start at a source")
            if len(p) > 1 and p[-1][0] != "t":
                raise ValueError("a routed path must end at a sink")
            for v in p:
                if v in used:
                    raise ValueError("paths share a vertex")
                used.add(v)

    def realized(self) -> tuple[int, ...]:
        ends = [p[-1][1] for p in self.paths]
        return tuple(sorted(ends))


def find_path_system(source, subset) -> PathSystem | None:
    """Explicit vertex-disjoint path system realizing the subset, found by
    backtracking source by source; None when no system exists.  Independent
    of the flow-based test, which it cross-checks in the suite."""
    net = source if isinstance(source, PlanarNetwork) else build_network(source)
    s_mask = as_mask(subset, net.n)
    if s_mask.bit_count() != net.k:
        return None
    staying = members_of(net.sources.mask & s_mask)
    to_route = members_of(net.sources.mask & ~s_mask)
    goals = set(members_of(s_mask & net.sinks.mask))
    if len(to_route) != len(goals):
        return None
    trivial = tuple((("s", i),) for i in staying)
    if not to_route:
        return PathSystem(trivial)

    used: set = set()
    routed: list[tuple] = []

    def walks(vertex) -> Iterator[tuple]:
        # The network is acyclic, so paths are simple without bookkeeping;
        # `used` only guards against vertices claimed by earlier paths.
        if vertex in used:
            return
        if vertex[0] == "t":
            if vertex[1] in goals:
                yield (vertex,)
            return
        for nxt in net.edges.get(vertex, ()):
            for tail in walks(nxt):
                yield (vertex,) + tail

    def assign(idx: int) -> bool:
        if idx == len(to_route):
            return True
        start = ("s", to_route[idx])
        for path in walks(start):
            goal = path[-1]
            used.update(path)
            goals.discard(goal[1])
            routed.append(path)
            if assign(idx + 1):
                return True
            routed.pop()
            goals.add(goal[1])
            used.difference_update(path)
        return False

    if not assign(0):
        return None
    return PathSystem(trivial + tuple(routed))


def cell_numbering(k: int, n: int) -> dict[int, tuple[int, int]]:
    """Boundary cells of the k x (n-k) box keyed by label: 1 on the bottom
    right corner, then the top row right to left, then the left column top
    to bottom."""
    if not 2 <= k <= n - 1:
        raise ValueError(f"numbering needs 2 <= k <= n-1, got k={k}, n={n}")
    cells = {1: (k, n - k)}
    for off, label in enumerate(range(2, n - k + 2)):
        cells[label] = (1, n - k - off)
    for off, label in enumerate(range(n - k + 1, n + 1)):
        cells[label] = (1 + off, 1)
    return cells


def le_from_removals(removed, k: int, n: int) -> LeDiagram:
    """Fully bulleted box with the bullets at the numbered boundary cells in
    `removed` taken out; removing label 1 also trims its corner cell, which
    keeps the filling a Le-diagram.  Any subset of [n] is accepted."""
    if not 2 <= k <= n - 1:
        raise ValueError(f"construction needs 2 <= k <= n-1, got k={k}, n={n}")
    if hasattr(removed, "members"):
        labels = set(removed.members)
    else:
        labels = {int(x) for x in removed}
    for x in labels:
        if not 1 <= x <= n:
            raise ValueError(f"label {x} outside [1, {n}]")
    cells = cell_numbering(k, n)
    shape = [n - k] * k
    if 1 in labels:
        shape[k - 1] = n - k - 1
    filling = [[True] * w for w in shape]
    for lab in labels:
        r, c = cells[lab]
        if c <= shape[r - 1]:
            filling[r - 1][c - 1] = False
    return LeDiagram.make(k, n, shape, filling)


def render_le(diag: LeDiagram) -> str:
    """ASCII picture: '*' for a bullet, '.' for an empty cell, each row's
    source label after the row, and the sink labels under their columns on
    the final line."""
    b = boundary_labels(diag)
    w = len(str(diag.n))
    row_source = {r: label for label, r in b.source_row.items()}
    col_sink = {c: label for label, c in b.sink_col.items()}
    widths = list(diag.shape) + [0] * (diag.k - len(diag.shape))
    lines = []
    for r in range(1, diag.k + 1):
        cells = [("*" if diag.filling[r - 1][c - 1] else ".").ljust(w)
                 for c in range(1, widths[r - 1] + 1)]
        cells.append(str(row_source[r]).ljust(w))
        lines.append(" ".join(cells).rstrip())
    bottom = " ".join(str(col_sink[c]).ljust(w)
                      for c in range(1, diag.n - diag.k + 1)).rstrip()
    if bottom:
        lines.append(bottom)
    return "\n".join(lines) + "\n"
