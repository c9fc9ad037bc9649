"""Command line interface.

Exit codes: 0 on success or an affirmative decision, 1 on a negative
decision (not isomorphic, failed verification), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import verify
from .coloring import Coloring, are_isomorphic, canonical_form
from .cube import (CubeParams, active_line_count, blocks, classify_point, degree,
                   enumerate_lines, line_count)
from .group import (DEFAULT_CAP, CapExceeded, GroupError, enumerate_group,
                    factor_automorphism, format_automorphism, group_order)
from .oracle import TooLarge
from .reduction import Graph, ReductionError, graph_iso_via_cube, reduce_graph

SCHEMA_VERSION = 1
EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA_VERSION, **payload}, sort_keys=True))
    else:
        print(text)


def _cube(args: argparse.Namespace) -> CubeParams:
    return CubeParams(args.n, args.d)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def read_labeled_graph(text: str) -> tuple[Graph, list[str]]:
    """Parse an edge list, relabeling vertices to 0..n-1 when needed.

    With a ``p <n>`` header the labels must already be 0..n-1.  Otherwise the
    distinct labels are sorted (numerically when all are integers) and
    numbered in that order.
    """
    n = None
    raw_edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0].startswith("#"):
            continue
        if fields[0] == "p":
            if len(fields) != 2 or not fields[1].isdigit():
                raise UsageError(f"line {lineno}: header must be 'p <n>'")
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise UsageError(f"line {lineno}: expected 'u v', got {line.strip()!r}")
        raw_edges.append((fields[0], fields[1]))
    if n is not None:
        try:
            return Graph.from_edges([(int(u), int(v)) for u, v in raw_edges], n), \
                [str(i) for i in range(n)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    labels = sorted({x for e in raw_edges for x in e},
                    key=lambda x: (0, int(x), x) if x.lstrip("-").isdigit() else (1, 0, x))
    number = {label: i for i, label in enumerate(labels)}
    try:
        g = Graph.from_edges([(number[u], number[v]) for u, v in raw_edges], len(labels))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return g, labels


def cmd_lines(args: argparse.Namespace) -> int:
    cube = _cube(args)
    if args.count_only:
        count = line_count(cube) if cube.n ** cube.d > 10 ** 6 else len(enumerate_lines(cube))
        _emit({"n": cube.n, "d": cube.d, "count": count}, args.json, str(count))
        return EXIT_OK
    lines = enumerate_lines(cube)
    if args.json:
        _emit({"n": cube.n, "d": cube.d, "count": len(lines), "lines": [
            {"type": [e if isinstance(e, str) else int(e) for e in line.type.entries],
             "points": list(line.points)}
            for line in lines]}, True, "")
    else:
        for line in lines:
            print(f"{line.type}\t{' '.join(map(str, line.points))}")
    return EXIT_OK


def cmd_group_order(args: argparse.Namespace) -> int:
    cube = _cube(args)
    order = group_order(cube)
    _emit({"n": cube.n, "d": cube.d, "order": order}, args.json, str(order))
    return EXIT_OK


def cmd_group_enumerate(args: argparse.Namespace) -> int:
    cube = _cube(args)
    rows = (format_automorphism(a) for a in enumerate_group(cube, cap=args.cap))
    if args.out:
        with open(args.out, "w") as fh:
            for row in rows:
                fh.write(row + "\n")
    else:
        for row in rows:
            print(row)
    return EXIT_OK


def _parse_point(text: str, cube: CubeParams) -> tuple[int, ...]:
    try:
        p = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"point must be comma-separated integers, got {text!r}") from None
    cube.check_point(p)
    return p


def cmd_degree(args: argparse.Namespace) -> int:
    cube = _cube(args)
    p = _parse_point(args.point, cube)
    parts = [{"j": b.j, "members": sorted(b.members), "active_lines": active_line_count(cube, b)}
             for b in blocks(cube, p)]
    deg = degree(cube, p)
    text = [f"degree {deg} ({classify_point(cube, p).value})"]
    text += [f"  block j={b['j']} members={b['members']} active={b['active_lines']}" for b in parts]
    _emit({"point": list(p), "degree": deg, "kind": classify_point(cube, p).value,
           "blocks": parts}, args.json, "\n".join(text))
    return EXIT_OK


def _load_coloring(path: str) -> Coloring:
    try:
        return Coloring.from_json(_read(path))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_canon(args: argparse.Namespace) -> int:
    if args.ttt is not None:
        if args.n is None or args.d is None:
            raise UsageError("--ttt needs --n and --d")
        s = Coloring.from_ttt(args.ttt, CubeParams(args.n, args.d))
    elif args.input:
        s = _load_coloring(args.input)
    else:
        raise UsageError("canon needs --in FILE or --ttt STRING")
    cf = canonical_form(s, cap=args.cap, threads=args.threads)
    if args.ttt is not None:
        text = cf.coloring.to_ttt()
    else:
        text = " ".join(map(str, cf.coloring.colors))
    _emit({"n": s.cube.n, "d": s.cube.d, "k": s.k, "colors": list(cf.coloring.colors),
           "witness": format_automorphism(cf.witness)}, args.json,
          f"{text}\n{format_automorphism(cf.witness)}")
    return EXIT_OK


def cmd_iso(args: argparse.Namespace) -> int:
    s1, s2 = _load_coloring(args.a), _load_coloring(args.b)
    if s1.cube != s2.cube or s1.k != s2.k:
        raise UsageError("colorings differ in cube or number of colors")
    witness = are_isomorphic(s1, s2, cap=args.cap)
    if witness is None:
        _emit({"isomorphic": False}, args.json, "not isomorphic")
        return EXIT_NO
    _emit({"isomorphic": True, "witness": format_automorphism(witness)}, args.json,
          format_automorphism(witness))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    g, _ = read_labeled_graph(_read(args.graph))
    s = reduce_graph(g)
    if args.out:
        Path(args.out).write_text(s.to_json() + "\n")
    else:
        print(s.to_json())
    return EXIT_OK


def cmd_graph_iso(args: argparse.Namespace) -> int:
    g1, labels1 = read_labeled_graph(_read(args.a))
    g2, labels2 = read_labeled_graph(_read(args.b))
    f = graph_iso_via_cube(g1, g2, mode=args.mode)
    if f is None:
        _emit({"isomorphic": False}, args.json, "not isomorphic")
        return EXIT_NO
    mapping = {labels1[i]: labels2[fi] for i, fi in enumerate(f)}
    _emit({"isomorphic": True, "bijection": mapping}, args.json,
          "\n".join(f"{u} -> {v}" for u, v in mapping.items()))
    return EXIT_OK


def cmd_factor(args: argparse.Namespace) -> int:
    cube = _cube(args)
    entries = [ln.split("#")[0].strip() for ln in _read(args.map).splitlines()]
    try:
        m = [int(x) for x in entries if x]
    except ValueError:
        raise UsageError("map file must hold one integer image index per line") from None
    a = factor_automorphism(cube, m)
    _emit({"n": cube.n, "d": cube.d, "automorphism": format_automorphism(a)}, args.json,
          format_automorphism(a))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cube = _cube(args)
    suites = list(verify.SUITES) if args.suite == "all" else [args.suite]
    results = verify.run_suites(cube, suites)
    for name, ok, detail in results:
        if not args.json:
            print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    if args.json:
        _emit({"n": cube.n, "d": cube.d, "suites": [
            {"suite": name, "pass": ok, "detail": detail} for name, ok, detail in results]},
            True, "")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_NO


def _add_cube(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--n", type=int, required=required, help="side length")
    p.add_argument("--d", type=int, required=required, help="dimension")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubelines",
        description="Automorphisms, canonical forms and isomorphism of the cube n^d.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lines", parents=[common], help="list the lines of n^d")
    _add_cube(p)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_lines)

    group = sub.add_parser("group", help="facts about the automorphism group")
    gsub = group.add_subparsers(dest="group_command", required=True)
    p = gsub.add_parser("order", parents=[common])
    _add_cube(p)
    p.set_defaults(func=cmd_group_order)
    p = gsub.add_parser("enumerate", parents=[common])
    _add_cube(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--out")
    p.set_defaults(func=cmd_group_enumerate)

    p = sub.add_parser("degree", parents=[common], help="degree and blocks of a point")
    _add_cube(p)
    p.add_argument("--point", required=True, help="comma-separated coordinates, 0-based")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("canon", parents=[common], help="canonical form of a coloring")
    p.add_argument("--in", dest="input")
    p.add_argument("--ttt", help="board over '.', 'x', 'o' in point-index order")
    _add_cube(p, required=False)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", parents=[common], help="decide colored cube isomorphism")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("reduce", parents=[common], help="graph to 2-colored square cube")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("graph-iso", parents=[common], help="graph isomorphism through the cube reduction")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--mode", choices=("fast", "full"), default="fast")
    p.set_defaults(func=cmd_graph_iso)

    p = sub.add_parser("factor", parents=[common], help="factor a point map into (perm, flips, value)")
    p.add_argument("--map", required=True, help="one image index per line")
    _add_cube(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", parents=[common], help="compare against brute-force oracles")
    _add_cube(p)
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, GroupError, ReductionError, TooLarge, ValueError,
            OverflowError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
