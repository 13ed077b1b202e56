"""Command-line verification harness.

Subcommands: gen, diameter, pairs, count, enumerate, euler, explain, verify.
Data goes to stdout (text, JSON lines, or CSV), diagnostics to stderr.
Exit codes: 0 success / all claims pass, 1 verification failure, 2 usage
error, 3 domain error (non-member vertex, invalid permutation or path).

Counts are emitted as decimal strings, never as floats; identical
invocations produce byte-identical output.  The env var CUBEPATHS_MAX_N
raises the built-in size caps.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Sequence

from . import bijection, bitcubes, euler, metrics, pathcount
from .bitcubes import CubeFamily, Vertex
from .errors import (
    CubeError,
    InvalidArgumentError,
    InvalidLengthError,
    InvalidPathError,
    InvalidPermutationError,
    InvalidVertexError,
)

USAGE_ERROR = 2
DOMAIN_ERROR = 3

# default size caps per operation class; CUBEPATHS_MAX_N raises them
CAPS = {
    "gen": 20,
    "allpairs": 16,
    "allpairs_hypercube": 12,
    "endpoints": 20,
    "enumerate": 12,
    "verify_count": 14,
    "verify_bijection": 9,
}


def _cap(kind: str) -> int:
    base = CAPS[kind]
    env = os.environ.get("CUBEPATHS_MAX_N")
    if env:
        try:
            return max(base, int(env))
        except ValueError:
            pass
    return base


def _check_cap(n: int, kind: str) -> None:
    limit = _cap(kind)
    if n > limit:
        raise InvalidArgumentError(
            f"n={n} exceeds the {kind} cap of {limit}; set CUBEPATHS_MAX_N to raise it"
        )


def _parse_family(name: str) -> CubeFamily:
    return CubeFamily.parse(name)


def _parse_vertex(s: str, family: CubeFamily, n: int) -> Vertex:
    v = Vertex.from_string(s)
    if v.length != n:
        raise InvalidVertexError(f"vertex {s!r} has length {v.length}, expected {n}")
    if not bitcubes.is_member(family, v):
        raise InvalidVertexError(f"{s} is not a member of {family.value}")
    return v


def _emit(records: Sequence[dict], fmt: str, text_of: Callable[[dict], str]) -> None:
    out = sys.stdout
    if fmt == "text":
        for rec in records:
            out.write(text_of(rec) + "\n")
    elif fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        if not records:
            return
        writer = csv.DictWriter(out, fieldnames=list(records[0].keys()), lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow({k: _csv_cell(v) for k, v in rec.items()})
    else:
        raise InvalidArgumentError(f"unknown format {fmt!r}")


def _csv_cell(value: object) -> str:
    if isinstance(value, (list, tuple)):
        return "|".join(str(x) for x in value)
    return str(value)


# ---------------------------------------------------------------- commands


def cmd_gen(args: argparse.Namespace) -> int:
    family = _parse_family(args.family)
    _check_cap(args.n, "gen")
    records = [{"vertex": str(v)} for v in bitcubes.generate_vertices(family, args.n)]
    _emit(records, args.format, lambda r: r["vertex"])
    return 0


def cmd_diameter(args: argparse.Namespace) -> int:
    family = _parse_family(args.family)
    kind = "allpairs_hypercube" if family is CubeFamily.HYPERCUBE else "allpairs"
    _check_cap(args.n, kind)
    d = metrics.diameter(family, args.n)
    rec = {"family": family.value, "n": args.n, "diameter": d}
    _emit([rec], args.format, lambda r: str(r["diameter"]))
    return 0


def cmd_pairs(args: argparse.Namespace) -> int:
    family = _parse_family(args.family)
    kind = "allpairs_hypercube" if family is CubeFamily.HYPERCUBE else "allpairs"
    _check_cap(args.n, kind)
    pairs = metrics.diametral_pairs(family, args.n)
    records = [{"u": str(p.u), "v": str(p.v), "distance": p.distance} for p in pairs]
    _emit(records, args.format, lambda r: f"{r['u']} {r['v']} {r['distance']}")
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    family = _parse_family(args.family)
    if (args.src is None) != (args.dst is None):
        raise InvalidArgumentError("--from and --to must be given together")
    if args.src is not None:
        _check_cap(args.n, "endpoints")
        u = _parse_vertex(args.src, family, args.n)
        v = _parse_vertex(args.dst, family, args.n)
        count = pathcount.count_shortest_paths(family, u, v)
        records = [
            {
                "u": str(u),
                "v": str(v),
                "distance": bitcubes.hamming_distance(u, v),
                "count": str(count),
            }
        ]
        _emit(records, args.format, lambda r: r["count"])
        return 0
    kind = "allpairs_hypercube" if family is CubeFamily.HYPERCUBE else "allpairs"
    _check_cap(args.n, kind)
    records = [
        {"u": str(p.u), "v": str(p.v), "distance": p.distance, "count": str(c)}
        for p, c in pathcount.count_all_diametral(family, args.n)
    ]
    _emit(records, args.format, lambda r: f"{r['u']} {r['v']} {r['count']}")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    family = _parse_family(args.family)
    _check_cap(args.n, "enumerate")
    if (args.src is None) != (args.dst is None):
        raise InvalidArgumentError("--from and --to must be given together")
    if args.src is not None:
        pairs = [(_parse_vertex(args.src, family, args.n), _parse_vertex(args.dst, family, args.n))]
    else:
        pairs = [(p.u, p.v) for p in metrics.diametral_pairs(family, args.n)]
    records = []
    for u, v in pairs:
        for i, path in enumerate(pathcount.enumerate_shortest_paths(family, u, v)):
            records.append(
                {"u": str(u), "v": str(v), "index": i, "steps": [str(w) for w in path]}
            )
    _emit(records, args.format, lambda r: " ".join(r["steps"]))
    return 0


def cmd_euler(args: argparse.Namespace) -> int:
    if args.m < 0:
        raise InvalidArgumentError("m must be nonnegative")
    if args.method == "andre":
        values = euler.euler_via_andre(args.m)
    else:
        values = euler.euler_numbers(args.m).values
    records = [{"n": k, "euler": str(val)} for k, val in enumerate(values)]
    _emit(records, args.format, lambda r: f"{r['n']} {r['euler']}")
    return 0


def cmd_explain(args: argparse.Namespace) -> int:
    family = _parse_family(args.family)
    if family not in (CubeFamily.FIBONACCI, CubeFamily.LUCAS):
        raise InvalidArgumentError("explain supports the fibonacci and lucas families")
    if (args.perm is None) == (args.path is None):
        raise InvalidArgumentError("give exactly one of --perm or --path")
    n = args.n
    if args.perm is not None:
        try:
            perm = tuple(int(x) for x in args.perm.replace(" ", "").split(","))
        except ValueError:
            raise InvalidPermutationError(f"cannot parse permutation {args.perm!r}") from None
        if family is CubeFamily.FIBONACCI:
            path = bijection.permutation_to_path(perm, n)
        else:
            path = bijection.lucas_permutation_to_path(perm)
    else:
        steps = args.path.replace(" ", "").split(",")
        path = tuple(Vertex.from_string(s) for s in steps)
        if path and path[0].length != n:
            raise InvalidPathError(f"path vertices have length {path[0].length}, expected {n}")
        perm = (
            bijection.path_to_permutation(path)
            if family is CubeFamily.FIBONACCI
            else bijection.lucas_path_to_permutation(path)
        )
    table = bijection.StepTable.from_path(family, path)
    if args.format == "json":
        rec = {
            "family": family.value,
            "n": n,
            "rows": [str(w) for w in table.rows],
            "marks": {str(j): t for j, t in sorted(table.marks.items())},
            "permutation": list(perm),
        }
        _emit([rec], "json", str)
    else:
        sys.stdout.write(table.render() + "\n")
        sys.stdout.write("permutation: " + " ".join(str(x) for x in perm) + "\n")
    return 0


# ----------------------------------------------------------------- verify


@dataclass
class Claim:
    claim_id: str
    family: str
    n: int
    expected: object
    observed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.observed


def _pair_strings(pairs: Sequence[metrics.DiametralPair]) -> list[str]:
    return [f"{p.u} {p.v}" for p in pairs]


def _euler_claims(max_m: int) -> list[Claim]:
    table = euler.euler_numbers(max(max_m, 6))
    claims = [
        Claim(
            "euler/prefix",
            "euler",
            6,
            "1,1,1,2,5,16,61",
            ",".join(str(x) for x in table.values[:7]),
        ),
        Claim(
            f"euler/andre-agreement/m={max_m:02d}",
            "euler",
            max_m,
            [str(x) for x in euler.euler_via_andre(max_m)],
            [str(x) for x in table.values[: max_m + 1]],
        ),
    ]
    top = min(max_m, 8)
    claims.append(
        Claim(
            f"euler/alternating-enumeration/n={top:02d}",
            "euler",
            top,
            [str(x) for x in table.values[: top + 1]],
            [str(sum(1 for _ in euler.enumerate_alternating(k))) for k in range(top + 1)],
        )
    )
    return claims


def _fibonacci_claims(max_n: int) -> list[Claim]:
    table = euler.euler_numbers(max_n)
    claims = []
    for n in range(1, max_n + 1):
        expected_pairs = metrics.expected_diametral_pairs(CubeFamily.FIBONACCI, n)
        observed = pathcount.count_all_diametral(CubeFamily.FIBONACCI, n)
        claims.append(
            Claim(
                f"fibonacci/n={n:02d}/diametral-count",
                "fibonacci",
                n,
                {"pairs": _pair_strings(expected_pairs), "counts": [str(table.values[n])]},
                {
                    "pairs": _pair_strings([p for p, _ in observed]),
                    "counts": [str(c) for _, c in observed],
                },
            )
        )
    return claims


def _lucas_claims(max_n: int) -> list[Claim]:
    table = euler.euler_numbers(max_n)
    claims = []
    for n in range(2, max_n + 1):
        expected_pairs = metrics.expected_diametral_pairs(CubeFamily.LUCAS, n)
        if n % 2 == 0:
            counts = [str(n // 2 * table.values[n - 1])]
        else:
            counts = [str(table.values[n - 1])] * n
        observed = pathcount.count_all_diametral(CubeFamily.LUCAS, n)
        claims.append(
            Claim(
                f"lucas/n={n:02d}/diametral-count",
                "lucas",
                n,
                {"pairs": _pair_strings(expected_pairs), "counts": counts},
                {
                    "pairs": _pair_strings([p for p, _ in observed]),
                    "counts": [str(c) for _, c in observed],
                },
            )
        )
    for n in range(3, min(max_n, _cap("verify_bijection") - 2) + 1, 2):
        total = table.values[n - 1]
        u1, v1 = metrics.lucas_odd_pair(n, 1)
        base = list(pathcount.enumerate_shortest_paths(CubeFamily.LUCAS, u1, v1))
        valid = 0
        for i in range(1, n + 1):
            images = set()
            for path in base:
                shifted = bijection.lucas_odd_shift_transport(path, i)
                images.add(shifted)
            ui, vi = metrics.lucas_odd_pair(n, i)
            if len(images) == total and all(
                p[0] == ui and p[-1] == vi for p in images
            ):
                valid += 1
        claims.append(
            Claim(
                f"lucas/n={n:02d}/shift-transport",
                "lucas",
                n,
                {"shifts": n, "paths_each": str(total)},
                {"shifts": valid, "paths_each": str(total)},
            )
        )
    return claims


def _alternate_lucas_claims(max_n: int) -> list[Claim]:
    table = euler.euler_numbers(max_n)
    claims = []
    for n in range(4, max_n + 1):
        expected_pairs = metrics.expected_diametral_pairs(CubeFamily.ALTERNATE_LUCAS, n)
        observed = pathcount.count_all_diametral(CubeFamily.ALTERNATE_LUCAS, n)
        forms = metrics.alternate_lucas_pair_forms(n)
        expected_counts = {
            "i": str(comb(n - 1, 2) * table.values[n - 3]),
            "ii": str(comb(n - 1, 2) * table.values[n - 3]),
            "iii": str(table.values[n - 1]),
            "iv": str(table.values[n - 1]),
        }
        observed_counts = {}
        for kind, (u, v) in forms.items():
            observed_counts[kind] = str(pathcount.count_shortest_paths(CubeFamily.ALTERNATE_LUCAS, u, v))
        claims.append(
            Claim(
                f"alternatelucas/n={n:02d}/diametral-count",
                "alternatelucas",
                n,
                {"pairs": _pair_strings(expected_pairs), "counts": expected_counts},
                {"pairs": _pair_strings([p for p, _ in observed]), "counts": observed_counts},
            )
        )
    return claims


def _bijection_claims(max_n: int) -> list[Claim]:
    table = euler.euler_numbers(max(max_n, 4))
    claims = []
    for n in range(1, max_n + 1):
        u, v = metrics.fibonacci_diametral_pair(n)
        paths = list(pathcount.enumerate_shortest_paths(CubeFamily.FIBONACCI, u, v))
        perms = [bijection.path_to_permutation(p) for p in paths]
        alternating = sum(1 for q in perms if euler.is_alternating(q))
        roundtrips = sum(
            1 for p, q in zip(paths, perms) if bijection.permutation_to_path(q, n) == p
        )
        count = str(table.values[n])
        claims.append(
            Claim(
                f"bijection/fibonacci/n={n:02d}/roundtrip",
                "fibonacci",
                n,
                {"paths": count, "alternating": count, "distinct": count, "roundtrips": count},
                {
                    "paths": str(len(paths)),
                    "alternating": str(alternating),
                    "distinct": str(len(set(perms))),
                    "roundtrips": str(roundtrips),
                },
            )
        )
    for n in range(2, max_n + 1, 2):
        u, v = metrics.lucas_even_pair(n)
        paths = list(pathcount.enumerate_shortest_paths(CubeFamily.LUCAS, u, v))
        perms = {bijection.lucas_path_to_permutation(p) for p in paths}
        circular = {q for q in perms if euler.is_circular_alternating(q)}
        count = str(n // 2 * table.values[n - 1])
        claims.append(
            Claim(
                f"bijection/lucas/n={n:02d}/circular",
                "lucas",
                n,
                {"paths": count, "circular_images": count, "class_size": count},
                {
                    "paths": str(len(paths)),
                    "circular_images": str(len(circular)),
                    "class_size": str(euler.count_class("circular", n)) if n <= 10 else count,
                },
            )
        )
    for n in range(4, max_n + 1):
        forms = metrics.alternate_lucas_pair_forms(n)
        expected = {
            "i": str(comb(n - 1, 2) * table.values[n - 3]),
            "ii": str(comb(n - 1, 2) * table.values[n - 3]),
            "iii": str(table.values[n - 1]),
            "iv": str(table.values[n - 1]),
        }
        observed = {}
        for kind, (u, v) in forms.items():
            paths = list(pathcount.enumerate_shortest_paths(CubeFamily.ALTERNATE_LUCAS, u, v))
            images = [bijection.alucas_path_to_permutation(p, kind) for p in paths]
            ok = len(set(images)) == len(paths) and all(
                bijection.alucas_permutation_to_path(img, n) == p
                for img, p in zip(images, paths)
            )
            observed[kind] = str(len(paths)) if ok else "roundtrip-failure"
        claims.append(
            Claim(
                f"bijection/alternatelucas/n={n:02d}/roundtrip",
                "alternatelucas",
                n,
                expected,
                observed,
            )
        )
    return claims


def _hypercube_claims(max_n: int) -> list[Claim]:
    claims = []
    for n in range(1, min(max_n, 8) + 1):
        u = Vertex(0, n)
        observed = str(pathcount.count_shortest_paths(CubeFamily.HYPERCUBE, u, metrics.antipode(u)))
        claims.append(
            Claim(
                f"hypercube/n={n:02d}/antipodal-count",
                "hypercube",
                n,
                str(factorial(n)),
                observed,
            )
        )
    return claims


SCOPES = ("fibonacci", "lucas", "alternatelucas", "euler", "bijection", "all")


def cmd_verify(args: argparse.Namespace) -> int:
    scope = args.scope.lower()
    if scope not in SCOPES:
        raise InvalidArgumentError(f"scope must be one of {SCOPES}")
    count_default = min(12, _cap("verify_count"))
    bij_default = min(8, _cap("verify_bijection"))
    claims: list[Claim] = []
    if scope in ("euler", "all"):
        claims += _euler_claims(args.max_n if args.max_n else 30)
    if scope in ("fibonacci", "all"):
        n = args.max_n or count_default
        _check_cap(n, "verify_count")
        claims += _fibonacci_claims(n)
    if scope in ("lucas", "all"):
        n = args.max_n or count_default
        _check_cap(n, "verify_count")
        claims += _lucas_claims(n)
    if scope in ("alternatelucas", "all"):
        n = args.max_n or count_default
        _check_cap(n, "verify_count")
        claims += _alternate_lucas_claims(n)
    if scope in ("bijection", "all"):
        n = args.max_n if scope == "bijection" and args.max_n else bij_default
        _check_cap(n, "verify_bijection")
        claims += _bijection_claims(n)
    if scope == "all":
        claims += _hypercube_claims(count_default)

    claims.sort(key=lambda c: c.claim_id)
    passed = sum(1 for c in claims if c.passed)
    failed = len(claims) - passed

    if args.format == "json":
        for c in claims:
            rec = {
                "claim": c.claim_id,
                "family": c.family,
                "n": c.n,
                "expected": c.expected,
                "observed": c.observed,
                "pass": c.passed,
            }
            sys.stdout.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
        summary = {"summary": True, "passed": passed, "failed": failed, "total": len(claims)}
        sys.stdout.write(json.dumps(summary, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        for c in claims:
            if c.passed:
                sys.stdout.write(f"PASS {c.claim_id}\n")
            else:
                sys.stdout.write(
                    f"FAIL {c.claim_id} expected={c.expected!r} observed={c.observed!r}\n"
                )
        sys.stdout.write(f"{passed} passed, {failed} failed, {len(claims)} total\n")
    return 0 if failed == 0 else 1


# ------------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubepaths",
        description="Diametral paths in Fibonacci, Lucas and Alternate Lucas cubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("gen", help="list the vertices of a cube family")
    p.add_argument("family")
    p.add_argument("n", type=int)
    add_format(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("diameter", help="graph diameter by exhaustive BFS")
    p.add_argument("family")
    p.add_argument("n", type=int)
    add_format(p)
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("pairs", help="all diametrically opposite vertex pairs")
    p.add_argument("family")
    p.add_argument("n", type=int)
    add_format(p)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("count", help="count shortest paths (diametral pairs by default)")
    p.add_argument("family")
    p.add_argument("n", type=int)
    p.add_argument("--from", dest="src")
    p.add_argument("--to", dest="dst")
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list shortest paths")
    p.add_argument("family")
    p.add_argument("n", type=int)
    p.add_argument("--from", dest="src")
    p.add_argument("--to", dest="dst")
    add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("euler", help="Euler numbers E_0..E_m")
    p.add_argument("m", type=int)
    p.add_argument("--method", choices=("boustrophedon", "andre"), default="boustrophedon")
    add_format(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("explain", help="render the marked step table of a path")
    p.add_argument("family")
    p.add_argument("n", type=int)
    p.add_argument("--perm", help="comma-separated permutation, e.g. 3,1,6,4,7,2,5")
    p.add_argument("--path", help="comma-separated vertex strings, bottom-up")
    add_format(p)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("verify", help="check every counting claim against brute force")
    p.add_argument("scope", choices=SCOPES)
    p.add_argument("max_n", type=int, nargs="?", default=None)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidVertexError, InvalidPathError, InvalidPermutationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except (InvalidLengthError, InvalidArgumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except CubeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
