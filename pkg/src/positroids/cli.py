"""Command line front end: validate, convert, classify, enumerate, verify.

Exit codes: 0 for success or an affirmative verdict, 1 for malformed input or
usage problems, 2 for a negative mathematical verdict (not a positroid, not
sparse paving, oracle discrepancy), so scripts can tell the cases apart.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .decorated import (
    DecoratedPermutation,
    decperm_to_necklace,
    necklace_to_decperm,
    perm_sparse_paving_witness,
)
from .enumeration import count_sparse_paving, enumerate_sparse_paving
from .le_diagram import (
    LeDiagram,
    le_from_removals,
    le_violation,
    realizable_sets,
    render_le,
)
from .matroid import (
    Matroid,
    _exchange_masks,
    is_sparse_paving,
    k_subset_masks,
    members_of,
)
from .necklace import (
    GrassmannNecklace,
    NonAdjacentSet,
    all_necklaces,
    cyclic_interval,
    is_positroid,
    necklace_from_nonadjacent,
    necklace_to_positroid,
    positroid_necklace,
    sparse_paving_witness,
)

KINDS = ("necklace", "decperm", "le", "bases", "nonadjacent")


class CliError(Exception):
    """Malformed input or bad usage; exits with status 1."""


class NegativeVerdict(Exception):
    """Valid input with a negative mathematical outcome; exits with 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_json(path: str | None):
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        raise CliError(str(exc))
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"parse error at line {exc.lineno} column {exc.colno}: "
                       f"{exc.msg}")


_LOADERS = {
    "necklace": GrassmannNecklace.from_dict,
    "decperm": DecoratedPermutation.from_dict,
    "le": LeDiagram.from_dict,
    "bases": Matroid.from_dict,
    "nonadjacent": NonAdjacentSet.from_dict,
}


def _load(kind: str, data) -> object:
    try:
        obj = _LOADERS[kind](data)
    except (KeyError, TypeError, AttributeError) as exc:
        raise CliError(f"malformed {kind} payload: {exc}")
    except ValueError as exc:
        raise CliError(str(exc))
    if kind == "bases":
        if not _exchange_masks(obj.bases):
            raise CliError("bases do not satisfy the exchange axiom")
    elif kind == "le":
        bad = le_violation(obj)
        if bad is not None:
            raise CliError(f"Le condition fails at cell {bad}")
    return obj


def _dims(kind: str, obj, flag_k: int | None) -> tuple[int, int]:
    """Resolve (n, k), insisting on --k where the payload cannot supply it."""
    n = obj.n
    k = getattr(obj, "k", None)
    if k is None:
        if flag_k is None:
            raise CliError(f"--k is required for {kind} input")
        k = flag_k
    elif flag_k is not None and flag_k != k:
        raise CliError(f"--k {flag_k} conflicts with the payload's k={k}")
    return n, k


def _as_necklace(kind: str, obj, k: int | None) -> GrassmannNecklace:
    if kind == "necklace":
        return obj
    if kind == "decperm":
        if k is None:
            raise CliError("--k is required for decperm input")
        return decperm_to_necklace(obj, k)
    if kind == "nonadjacent":
        if k is None:
            raise CliError("--k is required for nonadjacent input")
        return necklace_from_nonadjacent(obj, k, obj.n)
    if kind == "bases":
        if not is_positroid(obj):
            raise NegativeVerdict("not a positroid")
        return positroid_necklace(obj)
    if kind == "le":
        return positroid_necklace(realizable_sets(obj))
    raise CliError(f"unknown kind {kind!r}")


def _from_necklace(kind: str, neck: GrassmannNecklace):
    if kind == "necklace":
        return neck
    if kind == "decperm":
        return necklace_to_decperm(neck)
    if kind == "bases":
        return necklace_to_positroid(neck)
    witness = sparse_paving_witness(neck)
    if witness is None:
        raise NegativeVerdict("not sparse paving")
    if kind == "nonadjacent":
        return witness
    if kind == "le":
        return le_from_removals(witness, neck.k, neck.n)
    raise CliError(f"unknown kind {kind!r}")


def _violating_pair(m: Matroid) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lexicographically first pair of missing k-sets at symmetric
    difference two; exists whenever the matroid is not sparse paving."""
    nonbases = sorted((x for x in k_subset_masks(m.n, m.k)
                       if x not in m.bases), key=members_of)
    for a, b in itertools.combinations(nonbases, 2):
        if (a ^ b).bit_count() == 2:
            return members_of(a), members_of(b)
    raise RuntimeError("internal: no violating pair in a non sparse paving "
                       "matroid")


def cmd_validate(args) -> int:
    _load(args.kind, _read_json(args.input))
    print("valid")
    return 0


def cmd_convert(args) -> int:
    obj = _load(args.src, _read_json(args.input))
    _, k = _dims(args.src, obj, args.k)
    neck = _as_necklace(args.src, obj, k)
    out = _from_necklace(args.dst, neck)
    if args.dst == "le" and args.format == "ascii":
        print(render_le(out), end="")
    else:
        print(_dumps(out.to_dict()))
    return 0


def cmd_check_sp(args) -> int:
    obj = _load(args.kind, _read_json(args.input))
    n, k = _dims(args.kind, obj, args.k)
    if not 2 <= k <= n - 2:
        raise CliError(f"classification needs 2 <= k <= n-2, got k={k}, n={n}")
    matroid = None
    if args.kind == "nonadjacent":
        witness = obj
    elif args.kind == "decperm":
        witness = perm_sparse_paving_witness(obj, k)
        if witness is None:
            matroid = necklace_to_positroid(decperm_to_necklace(obj, k))
    else:
        if args.kind == "necklace":
            neck = obj
        elif args.kind == "bases":
            if not is_positroid(obj):
                raise NegativeVerdict("not a positroid")
            neck = positroid_necklace(obj)
        else:
            matroid = realizable_sets(obj)
            neck = positroid_necklace(matroid)
        witness = sparse_paving_witness(neck)
        if witness is None and matroid is None:
            matroid = necklace_to_positroid(neck)
    if witness is not None:
        inner = ",".join(map(str, witness.members))
        print(f"sparse-paving A={{{inner}}}")
        chs = [list(cyclic_interval(k, n, i).members) for i in witness.members]
        print(f"circuit-hyperplanes: {_dumps(chs)}")
        return 0
    first, second = _violating_pair(matroid)
    print("not sparse-paving")
    print(f"witness: {_dumps(list(first))} {_dumps(list(second))}")
    return 2


def cmd_enumerate(args) -> int:
    if args.count_only:
        print(count_sparse_paving(args.k, args.n))
        return 0
    for entry in enumerate_sparse_paving(args.k, args.n):
        line = {
            "A": list(entry.nonadjacent.members),
            "necklace": entry.necklace.to_dict(),
            "perm": entry.perm.to_dict(),
            "le": entry.diagram.to_dict(),
            "bases": entry.matroid.to_dict(),
        }
        print(_dumps(line))
    return 0


def cmd_oracle(args) -> int:
    n, k = args.n, args.k
    if n > args.budget:
        print(f"n={n} exceeds the oracle budget {args.budget}; pass a larger "
              f"--budget to run it anyway", file=sys.stderr)
        return 1
    if not 2 <= k <= n - 2:
        raise CliError(f"oracle needs 2 <= k <= n-2, got k={k}, n={n}")
    total = found = discrepancies = 0
    for neck in all_necklaces(k, n):
        positroid = necklace_to_positroid(neck)
        by_matroid = is_sparse_paving(positroid)
        by_necklace = sparse_paving_witness(neck) is not None
        total += 1
        if by_matroid:
            found += 1
        if by_matroid != by_necklace:
            discrepancies += 1
    print(f"necklaces: {total}")
    print(f"sparse paving found: {found}")
    print(f"discrepancies: {discrepancies}")
    return 0 if discrepancies == 0 else 2


def cmd_render_le(args) -> int:
    diag = _load("le", _read_json(args.input))
    if args.format == "json":
        print(_dumps(diag.to_dict()))
    else:
        print(render_le(diag), end="")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="positroids",
                     description="Sparse paving positroid toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a payload against its "
                       "representation's invariants")
    p.add_argument("input", nargs="?", help="JSON file (stdin when omitted)")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("input", nargs="?")
    p.add_argument("--from", dest="src", required=True, choices=KINDS)
    p.add_argument("--to", dest="dst", required=True, choices=KINDS)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=("json", "ascii"), default="json")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check-sp", help="decide sparse paving with a witness")
    p.add_argument("input", nargs="?")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_check_sp)

    p = sub.add_parser("enumerate", help="stream or count the census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="brute-force agreement check between "
                       "the matroid-level and necklace-level classifiers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=6,
                   help="largest n the oracle will attempt (default 6)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render-le", help="ASCII picture of a Le-diagram")
    p.add_argument("input", nargs="?")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(func=cmd_render_le)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except NegativeVerdict as verdict:
        print(str(verdict), file=sys.stderr)
        return 2
    except CliError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
