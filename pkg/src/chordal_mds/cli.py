"""Command-line front end.

Subcommands: enumerate (stream solutions), count, check (enumerator vs
exhaustive oracle), gen (instance factories), bench (delay profile JSON).
Exit codes: 0 success, 2 input graph not chordal, 3 parse/usage error,
4 check mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, TextIO

from .graph import (
    BRUTE_FORCE_LIMIT,
    Graph,
    brute_force_minimal_dominating_sets,
)
from .clique_tree import CliqueTree, NotChordalError
from .delay import profile_delays
from .enumeration import iter_minimal_dominating_sets
from .files import (
    ParseError,
    parse_clique_tree,
    parse_dimacs_cnf,
    parse_graph,
    write_clique_tree,
    write_graph,
)
from .generators import random_chordal, sat_gadget, split_double

EXIT_OK = 0
EXIT_NOT_CHORDAL = 2
EXIT_PARSE = 3
EXIT_MISMATCH = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_instance(args) -> tuple:
    g = parse_graph(_read_text(args.input))
    tree = None
    if getattr(args, "tree", None):
        tree = parse_clique_tree(_read_text(args.tree), g)
    return g, tree


def _emit(d, fmt: str, out: TextIO) -> None:
    ids = sorted(d)
    if fmt == "ndjson":
        out.write(json.dumps({"d": ids}) + "\n")
    else:
        out.write(" ".join(str(v) for v in ids) + "\n")
    out.flush()


def _cmd_enumerate(args) -> int:
    g, tree = _load_instance(args)
    count = 0
    for d in iter_minimal_dominating_sets(g, tree=tree):
        _emit(d, args.format, sys.stdout)
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    return EXIT_OK


def _cmd_count(args) -> int:
    g, tree = _load_instance(args)
    count = sum(1 for _ in iter_minimal_dominating_sets(g, tree=tree))
    print(count)
    return EXIT_OK


def _cmd_check(args) -> int:
    g, tree = _load_instance(args)
    if g.n > BRUTE_FORCE_LIMIT:
        raise ParseError(f"check needs n <= {BRUTE_FORCE_LIMIT}, got {g.n}")
    emitted = list(iter_minimal_dominating_sets(g, tree=tree))
    expected = set(brute_force_minimal_dominating_sets(g))
    got = set(emitted)
    if len(emitted) != len(got):
        seen = set()
        for d in emitted:
            if d in seen:
                print(f"MISMATCH duplicate {sorted(d)}")
                return EXIT_MISMATCH
            seen.add(d)
    if got == expected:
        print("OK")
        return EXIT_OK
    missing = sorted(expected - got, key=lambda s: (len(s), sorted(s)))
    extra = sorted(got - expected, key=lambda s: (len(s), sorted(s)))
    if missing:
        print(f"MISMATCH missing {sorted(missing[0])}")
    else:
        print(f"MISMATCH extra {sorted(extra[0])}")
    return EXIT_MISMATCH


def _open_out(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _cmd_gen(args) -> int:
    if args.kind == "random":
        if not 0.0 <= args.density <= 1.0:
            raise ParseError("density must be in [0, 1]")
        g = random_chordal(args.n, args.density, args.seed)
        out, close = _open_out(args.out)
        try:
            write_graph(g, out)
        finally:
            if close:
                out.close()
    elif args.kind == "split":
        if args.input is None:
            raise ParseError("gen split needs --input GRAPH")
        g = parse_graph(_read_text(args.input))
        sg, _ = split_double(g)
        out, close = _open_out(args.out)
        try:
            write_graph(sg, out)
        finally:
            if close:
                out.close()
    else:  # gadget
        if args.cnf is None:
            raise ParseError("gen gadget needs --cnf FILE")
        if args.out is None:
            raise ParseError("gen gadget needs --out PREFIX (writes PREFIX.graph and PREFIX.tree)")
        inst = sat_gadget(parse_dimacs_cnf(_read_text(args.cnf)))
        with open(args.out + ".graph", "w", encoding="utf-8") as fh:
            write_graph(inst.graph, fh)
        with open(args.out + ".tree", "w", encoding="utf-8") as fh:
            write_clique_tree(inst.tree, fh)
        print(f"S {' '.join(str(v) for v in sorted(inst.s_set))}")
        print(f"X {' '.join(str(v) for v in sorted(inst.x_set))}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    g, _tree = _load_instance(args)
    profile = profile_delays(g, limit=args.limit)
    print(json.dumps(profile.summary()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordal-mds",
        description="Enumerate minimal dominating sets of chordal graphs with polynomial delay.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_args(p):
        p.add_argument("input", help="graph file ('n m' header + edge lines; '-' for stdin)")
        p.add_argument("--tree", help="explicit clique-tree file (validated)")

    p = sub.add_parser("enumerate", help="stream minimal dominating sets, one per line")
    add_instance_args(p)
    p.add_argument("--limit", type=int, help="stop after this many solutions")
    p.add_argument("--format", choices=("lines", "ndjson"), default="lines")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count", help="print the number of minimal dominating sets")
    add_instance_args(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("check", help="compare enumerator against the exhaustive oracle (n <= 20)")
    add_instance_args(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", help="generate instances")
    p.add_argument("kind", choices=("random", "gadget", "split"))
    p.add_argument("-n", type=int, default=10, help="vertex count (random)")
    p.add_argument("--density", type=float, default=0.5, help="attachment density (random)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cnf", help="DIMACS CNF input (gadget)")
    p.add_argument("--input", help="base graph file (split)")
    p.add_argument("--out", help="output path, or prefix for gadget (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="profile inter-output delays, print JSON summary")
    add_instance_args(p)
    p.add_argument("--limit", type=int, help="stop after this many solutions")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "limit", None) is not None and args.limit < 1:
        print("error: --limit must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except NotChordalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CHORDAL
    except BrokenPipeError:
        return EXIT_OK
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
