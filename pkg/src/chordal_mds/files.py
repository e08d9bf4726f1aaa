"""Plain-text file formats: edge-list graphs, explicit clique trees, and
DIMACS CNF.

Graph format: first meaningful line "n m", then m lines "u v".  Blank lines
and lines starting with '#' are ignored everywhere.  Clique-tree format:
first meaningful line the clique count t, then t lines "parent v1 v2 ..."
(parent -1 marks the root; clique ids are the 0-based line order).
"""

from __future__ import annotations

from typing import List, TextIO, Tuple

from .graph import Graph, build_graph
from .clique_tree import CliqueTree, build_clique_tree_from_spec
from .generators import CnfFormula, make_cnf


class ParseError(ValueError):
    """Malformed input file; message carries the 1-based line number."""


def _meaningful_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(lineno: int, line: str, what: str) -> List[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"line {lineno}: expected {what}, got {line!r}") from None


def parse_graph(text: str) -> Graph:
    lines = _meaningful_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("line 1: missing 'n m' header") from None
    fields = _ints(lineno, header, "'n m' header")
    if len(fields) != 2:
        raise ParseError(f"line {lineno}: header must be exactly 'n m', got {header!r}")
    n, m = fields
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: n and m must be non-negative")
    edges = []
    for lineno, line in lines:
        fields = _ints(lineno, line, "edge 'u v'")
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: edge line must be 'u v', got {line!r}")
        edges.append((fields[0], fields[1]))
    if len(edges) != m:
        raise ParseError(f"header announced {m} edges but file has {len(edges)}")
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_graph(g: Graph, out: TextIO) -> None:
    edges = g.edges()
    out.write(f"{g.n} {len(edges)}\n")
    for u, v in sorted(edges):
        out.write(f"{u} {v}\n")


def parse_clique_tree(text: str, g: Graph) -> CliqueTree:
    """Parse and fully validate an explicit clique tree for g."""
    lines = _meaningful_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("line 1: missing clique-count header") from None
    fields = _ints(lineno, header, "clique count")
    if len(fields) != 1 or fields[0] < 1:
        raise ParseError(f"line {lineno}: header must be a single positive clique count")
    t = fields[0]
    cliques = []
    parent = []
    for _ in range(t):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise ParseError(f"expected {t} clique lines, found {len(cliques)}") from None
        fields = _ints(lineno, line, "'parent v1 v2 ...'")
        if len(fields) < 2:
            raise ParseError(f"line {lineno}: clique line needs a parent and at least one vertex")
        parent.append(fields[0])
        members = fields[1:]
        if len(set(members)) != len(members):
            raise ParseError(f"line {lineno}: repeated vertex in clique")
        cliques.append(frozenset(members))
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(f"line {extra[0]}: trailing content after {t} clique lines")
    try:
        return build_clique_tree_from_spec(g, cliques, parent)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_clique_tree(tree: CliqueTree, out: TextIO) -> None:
    out.write(f"{len(tree.cliques)}\n")
    for c, clique in enumerate(tree.cliques):
        members = " ".join(str(v) for v in sorted(clique))
        out.write(f"{tree.parent[c]} {members}\n")


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """DIMACS CNF: 'p cnf <vars> <clauses>' then 0-terminated clauses.

    'c' comment lines are skipped; a clause may span lines; '%' and a
    trailing '0' line (a common benchmark idiom) end the input.
    """
    num_vars = None
    num_clauses = None
    clauses: List[List[int]] = []
    current: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if num_vars is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise ParseError(f"line {lineno}: malformed problem line {line!r}")
            try:
                num_vars, num_clauses = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed problem line {line!r}") from None
            continue
        if num_vars is None:
            raise ParseError(f"line {lineno}: clause before 'p cnf' problem line")
        for lit in _ints(lineno, line, "clause literals"):
            if lit == 0:
                if current:
                    clauses.append(current)
                    current = []
            else:
                current.append(lit)
    if current:
        raise ParseError("last clause is not terminated by 0")
    if num_vars is None:
        raise ParseError("missing 'p cnf' problem line")
    if num_clauses is not None and len(clauses) != num_clauses:
        raise ParseError(f"problem line announced {num_clauses} clauses but file has {len(clauses)}")
    try:
        return make_cnf(num_vars, clauses)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_dimacs_cnf(f: CnfFormula, out: TextIO) -> None:
    out.write(f"p cnf {f.num_vars} {len(f.clauses)}\n")
    for clause in f.clauses:
        lits = " ".join(str(l) for l in sorted(clause, key=abs))
        out.write(f"{lits} 0\n")
