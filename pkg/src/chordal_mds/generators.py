"""Instance factories: random chordal graphs, a CNF-to-chordal reduction
gadget, and split-graph doubling.

The CNF gadget encodes satisfiability as an extension question: the formula
is satisfiable exactly when some minimal dominating set of the gadget
contains the forced set S and avoids the forbidden set X, and the literal
vertices inside such sets read back as satisfying assignments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .graph import Graph, VertexSet, build_graph
from .clique_tree import CliqueTree, build_clique_tree_from_spec


@dataclass(frozen=True)
class CnfFormula:
    """CNF with 1-based variables; clauses are sets of signed indices."""

    num_vars: int
    clauses: Tuple[frozenset, ...]

    def __post_init__(self):
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            for lit in clause:
                v = abs(lit)
                if lit == 0 or v > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")
                if -lit in clause:
                    raise ValueError(f"clause contains both polarities of variable {v}")


def make_cnf(num_vars: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
    return CnfFormula(num_vars, tuple(frozenset(c) for c in clauses))


def random_chordal(n: int, density: float, seed: int) -> Graph:
    """Chordal graph grown by clique attachment.

    Each new vertex joins a random subset of one existing maximal clique:
    one guaranteed anchor plus each further clique member independently
    with probability `density`.  density 1.0 yields the complete graph,
    density 0.0 a random tree.  Deterministic per seed.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rng = random.Random(seed)
    edges = []
    cliques = [[0]] if n else []
    for v in range(1, n):
        base = rng.choice(cliques)
        picked = [rng.choice(base)]
        for u in base:
            if u != picked[0] and rng.random() < density:
                picked.append(u)
        for u in picked:
            edges.append((u, v))
        cliques.append(sorted(picked) + [v])
        if len(picked) == len(base):
            cliques.remove(base)
    return build_graph(n, edges)


@dataclass(frozen=True)
class GadgetInstance:
    """CNF reduction gadget with its explicit clique tree.

    s_set must be inside a qualifying minimal dominating set, x_set outside;
    literal_map gives per variable (1-based) the vertex ids of its positive
    and negative literal, None where the literal occurs in no clause.
    """

    formula: CnfFormula
    graph: Graph
    tree: CliqueTree
    s_set: VertexSet
    x_set: VertexSet
    literal_map: Tuple[Tuple[Optional[int], Optional[int]], ...]

    def qualifies(self, d: VertexSet) -> bool:
        return self.s_set <= d and not (self.x_set & d)


def sat_gadget(f: CnfFormula) -> GadgetInstance:
    """Build the reduction gadget for a CNF formula.

    Vertex layout (stable for golden files): clause vertices first, then the
    p/p̄ pairs, then per-variable blocks x_i, y_i, z_i, followed by [l_i, q_i]
    if the positive literal occurs and [l̄_i, q̄_i] if the negative one does.
    The clique tree is constructed explicitly and validated.
    """
    n, m = f.num_vars, len(f.clauses)
    labels = {}

    def new_vertex(label):
        v = len(labels)
        labels[v] = label
        return v

    c_ids = [new_vertex(f"c{j + 1}") for j in range(m)]
    p_ids, pbar_ids = [], []
    for i in range(1, n + 1):
        p_ids.append(new_vertex(f"p{i}"))
        pbar_ids.append(new_vertex(f"~p{i}"))

    occurs_pos = [any(i in c for c in f.clauses) for i in range(1, n + 1)]
    occurs_neg = [any(-i in c for c in f.clauses) for i in range(1, n + 1)]

    x_ids, y_ids, z_ids = [], [], []
    lit_map = []
    q_ids: Dict[int, int] = {}
    for i in range(1, n + 1):
        x_ids.append(new_vertex(f"x{i}"))
        y_ids.append(new_vertex(f"y{i}"))
        z_ids.append(new_vertex(f"z{i}"))
        pos = neg = None
        if occurs_pos[i - 1]:
            pos = new_vertex(f"l{i}")
            q_ids[pos] = new_vertex(f"q{i}")
        if occurs_neg[i - 1]:
            neg = new_vertex(f"~l{i}")
            q_ids[neg] = new_vertex(f"~q{i}")
        lit_map.append((pos, neg))

    root = frozenset(c_ids) | frozenset(p_ids) | frozenset(pbar_ids)
    cliques = [root]
    parent = [-1]

    def add_clique(members, par):
        cliques.append(frozenset(members))
        parent.append(par)
        return len(cliques) - 1

    for i in range(1, n + 1):
        xi, yi, zi = x_ids[i - 1], y_ids[i - 1], z_ids[i - 1]
        cx = add_clique({xi, p_ids[i - 1], pbar_ids[i - 1]}, 0)
        cy = add_clique({yi, xi}, cx)
        add_clique({yi, zi}, cy)
        pos, neg = lit_map[i - 1]
        if pos is not None:
            holding = [c_ids[j] for j, c in enumerate(f.clauses) if i in c]
            cl = add_clique({pos, p_ids[i - 1], *holding}, 0)
            add_clique({q_ids[pos], pos}, cl)
        if neg is not None:
            holding = [c_ids[j] for j, c in enumerate(f.clauses) if -i in c]
            cl = add_clique({neg, pbar_ids[i - 1], *holding}, 0)
            add_clique({q_ids[neg], neg}, cl)

    edges = []
    for clique in cliques:
        members = sorted(clique)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.append((members[a], members[b]))
    g = build_graph(len(labels), edges, labels)
    tree = build_clique_tree_from_spec(g, cliques, parent)

    s_set = frozenset(x_ids) | frozenset(y_ids)
    x_set = frozenset(z_ids) | frozenset(p_ids) | frozenset(pbar_ids) | frozenset(c_ids)
    return GadgetInstance(f, g, tree, s_set, x_set, tuple(lit_map))


def assignments_from_solution(inst: GadgetInstance, d: VertexSet) -> frozenset:
    """Full truth assignments consistent with one qualifying solution.

    The literal vertices inside d pin their variables; variables with
    neither literal chosen are free and expand to both polarities.  Each
    assignment is a tuple of booleans indexed by variable - 1.
    """
    if not inst.qualifies(d):
        raise ValueError("solution does not contain S or meets X")
    n = inst.formula.num_vars
    fixed: Dict[int, bool] = {}
    for i, (pos, neg) in enumerate(inst.literal_map, start=1):
        has_pos = pos is not None and pos in d
        has_neg = neg is not None and neg in d
        if has_pos and has_neg:
            raise ValueError(f"both literals of variable {i} chosen; solution is not minimal")
        if has_pos:
            fixed[i] = True
        elif has_neg:
            fixed[i] = False
    free = [i for i in range(1, n + 1) if i not in fixed]
    out = []
    for bits in range(1 << len(free)):
        assignment = dict(fixed)
        for k, i in enumerate(free):
            assignment[i] = bool(bits >> k & 1)
        out.append(tuple(assignment[i] for i in range(1, n + 1)))
    return frozenset(out)


def evaluate_cnf(f: CnfFormula, assignment: Sequence[bool]) -> bool:
    return all(
        any((lit > 0) == assignment[abs(lit) - 1] for lit in clause) for clause in f.clauses
    )


def truth_table_satisfying(f: CnfFormula) -> frozenset:
    """All satisfying assignments by exhaustive evaluation (oracle)."""
    out = []
    for bits in range(1 << f.num_vars):
        assignment = tuple(bool(bits >> i & 1) for i in range(f.num_vars))
        if evaluate_cnf(f, assignment):
            out.append(assignment)
    return frozenset(out)


def split_double(g: Graph):
    """Split graph on V ∪ V′: V a clique, V′ independent, and x adjacent to
    y′ exactly when x is in N[y].

    Returns (split graph, prime ids) with vertex x′ = n + x.
    """
    n = g.n
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for y in range(n):
        for x in g.adj[y] | {y}:
            edges.append((x, n + y))
    labels = {v: f"v{v}" for v in range(n)}
    labels.update({n + v: f"v{v}'" for v in range(n)})
    return build_graph(2 * n, edges, labels), tuple(range(n, 2 * n))
