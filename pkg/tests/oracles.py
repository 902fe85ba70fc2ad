"""Independent brute-force oracles used to pin expected values.

Everything here works with plain frozensets and itertools, deliberately
avoiding the package's bit mask machinery so the two routes stay separate.
"""

from itertools import chain, combinations


def powerset(universe):
    items = sorted(universe)
    return (frozenset(c) for c in
            chain.from_iterable(combinations(items, r)
                                for r in range(len(items) + 1)))


def ground(n):
    return frozenset(range(1, n + 1))


def is_independent(subset, bases):
    return any(subset <= b for b in bases)


def brute_rank(subset, bases):
    return max(len(subset & b) for b in bases)


def brute_circuits(n, bases):
    """Minimal dependent subsets by full power set scan."""
    out = []
    for s in powerset(ground(n)):
        if not s or is_independent(s, bases):
            continue
        if all(is_independent(s - {e}, bases) for e in s):
            out.append(s)
    return frozenset(out)


def brute_hyperplanes(n, k, bases):
    """Flats of rank k-1 by full power set scan."""
    out = []
    for s in powerset(ground(n)):
        if brute_rank(s, bases) != k - 1:
            continue
        if all(brute_rank(s | {g}, bases) > k - 1 for g in ground(n) - s):
            out.append(s)
    return frozenset(out)


def brute_exchange(bases):
    """Basis exchange axiom straight from its definition."""
    for b in bases:
        for bp in bases:
            if b == bp:
                continue
            for e in b - bp:
                if not any((b - {e}) | {ep} in bases for ep in bp - b):
                    return False
    return True


def brute_nonadjacent(n):
    """Subsets of [n] with no two distinct cyclically consecutive elements."""
    out = []
    for s in powerset(ground(n)):
        ok = True
        for i in s:
            j = i % n + 1
            if j != i and j in s:
                ok = False
                break
        if ok:
            out.append(s)
    return out


def brute_gale_min(bases, t, n):
    """Lexicographically least basis after rotating labels so t becomes 1."""
    def key(b):
        return tuple(sorted((x - t) % n for x in b))
    return min(bases, key=key)


def all_basis_families(n, k):
    """Every family of k-subsets of [n] that satisfies the exchange axiom,
    discovered with the independent exchange test."""
    candidates = [frozenset(c) for c in combinations(range(1, n + 1), k)]
    total = 1 << len(candidates)
    for bits in range(1, total):
        fam = frozenset(candidates[i] for i in range(len(candidates))
                        if bits >> i & 1)
        if brute_exchange(fam):
            yield fam
