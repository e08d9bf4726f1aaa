"""Extension machinery: private witnesses, safety, and the extendability test.

Everything here serves one question: given a partial antichain A and the
committed root-clique vertices (k1, k2), can A still be completed into a
minimal dominating set of the current (sub)problem?  The answer is assembled
from per-clique *private witness* sets D_C(x) — deterministic irredundant
sets that dominate V(C) away from x — plus two safety conditions on
candidate private neighbors, and from the bookkeeping sets Q/C*/C_* that
drive the clique-by-clique combination of sub-solutions.

Vertices in k1 still need a private neighbor; vertices in k2 already have
one secured elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood_of_set,
    greedy_minimal_dominating_subset,
    private_neighbors,
)
from .clique_tree import (
    CliqueTree,
    home_cliques,
    l_prime_set,
    uncov,
    up_set,
)


@dataclass(frozen=True)
class EnumContext:
    """One enumeration frame: graph, its clique tree, and the committed sets."""

    graph: Graph
    tree: CliqueTree
    k1: VertexSet = frozenset()
    k2: VertexSet = frozenset()

    def __post_init__(self):
        if self.k1 & self.k2:
            raise ValueError("k1 and k2 must be disjoint")
        root_clique = self.tree.cliques[self.tree.root]
        if not (self.k1 | self.k2) <= root_clique:
            raise ValueError("k1 and k2 must be contained in the root clique")

    @property
    def k(self) -> VertexSet:
        return self.k1 | self.k2


@dataclass(frozen=True)
class PrivateWitness:
    """The witness set D_C(x) = z_part ∪ greedy_part for one (clique, vertex).

    `anchor` is the vertex when it belongs to the clique; None otherwise (in
    that case the witness is just a greedy minimal dominating set of the
    clique's below-region and does not depend on the vertex at all).
    """

    clique: int
    anchor: Optional[int]
    z_part: VertexSet
    greedy_part: VertexSet

    @property
    def dset(self) -> VertexSet:
        return self.z_part | self.greedy_part


def f_cliques(ctx: EnumContext, c: int, x: int) -> frozenset:
    """Cliques of ℒ'({x}) lying in the subtree of c."""
    return frozenset(
        cp for cp in l_prime_set(ctx.tree, frozenset({x})) if ctx.tree.is_ancestor_or_self(c, cp)
    )


def private_witness(ctx: EnumContext, c: int, x: int) -> PrivateWitness:
    """D_C(x): deterministic, memoized on the tree.

    When x is in the clique: one vertex per home set of f_cliques(c, x)
    (smallest id), plus a greedy minimal dominating set of what remains of
    V(c) once N[x] and the neighborhoods of those picks are removed.  When
    x is outside the clique: a greedy minimal dominating set of G[V(c)].
    The greedy order is the current tree's vertex numbering.
    """
    g, tree = ctx.graph, ctx.tree
    in_clique = x in tree.cliques[c]
    key = (c, x) if in_clique else (c, None)
    cached = tree._witness_cache.get(key)
    if cached is not None:
        return cached
    order = tree.vertex_by_num
    if in_clique:
        z = frozenset(min(tree.fsets[cp]) for cp in f_cliques(ctx, c, x))
        world = (tree.vertices_below(c) - closed_neighborhood_of_set(g, {x})) - closed_neighborhood_of_set(g, z)
        witness = PrivateWitness(c, x, z, greedy_minimal_dominating_subset(g, world, order))
    else:
        greedy = greedy_minimal_dominating_subset(g, tree.vertices_below(c), order)
        witness = PrivateWitness(c, None, frozenset(), greedy)
    tree._witness_cache[key] = witness
    return witness


def _safe_private(ctx, lprime, uncov_set, x: int, y: int) -> bool:
    """Safety core with ℒ'(D∪K) and Uncov(D∪K) precomputed by the caller."""
    if x == y:
        return True
    g, tree = ctx.graph, ctx.tree
    witness_nbhd = {}

    def dominated_by_witness(c):
        n = witness_nbhd.get(c)
        if n is None:
            n = witness_nbhd[c] = closed_neighborhood_of_set(g, private_witness(ctx, c, y).dset)
        return n

    for c in lprime:
        if y in tree.cliques[c]:
            if not (g.adj[y] & tree.vertices_below(c)) <= dominated_by_witness(c):
                return False
    for z in (g.adj[y] | {y}) & uncov_set:
        if not any(z in dominated_by_witness(c) for c in lprime):
            return False
    return True


def is_safe_private(ctx: EnumContext, d: VertexSet, x: int, y: int) -> bool:
    """Is y a safe private neighbor of x with respect to d ∪ k?

    Safe means y can keep serving as x's private neighbor in some feasible
    completion: every clique of ℒ'(d∪k) containing y has its y-neighborhood
    dominated by the witness D_C(y), and every still-uncovered vertex next
    to y is reachable by some witness.  Requires x ∈ d ∪ k1 and
    y ∈ P(d∪k, x).
    """
    dk = frozenset(d) | ctx.k
    if x not in frozenset(d) | ctx.k1:
        raise ValueError(f"vertex {x} is not in d or k1")
    if y not in private_neighbors(ctx.graph, dk, x):
        raise ValueError(f"vertex {y} is not a private neighbor of {x}")
    return _safe_private(ctx, l_prime_set(ctx.tree, dk), uncov(ctx.tree, ctx.graph, dk), x, y)


def _safe_vertex(ctx, dk, lprime, uncov_set, x: int, debug_full_scan: bool) -> bool:
    g, tree = ctx.graph, ctx.tree
    p = private_neighbors(g, dk, x)
    if x in p:
        return True
    below_home = tree.vertices_below(tree.home[x])
    restricted = any(_safe_private(ctx, lprime, uncov_set, x, y) for y in p & below_home)
    if debug_full_scan:
        full = any(_safe_private(ctx, lprime, uncov_set, x, y) for y in p)
        assert full == restricted, f"restricted safety scan disagreed for vertex {x}"
    return restricted


def is_safe_vertex(ctx: EnumContext, d: VertexSet, x: int, debug_full_scan: bool = False) -> bool:
    """Does x own at least one safe private neighbor?

    Candidates are x itself and the privates homed in x's own subtree; any
    safe private elsewhere implies one there, so the restriction loses
    nothing (the debug flag re-scans the full private set and asserts the
    two answers agree).
    """
    d = frozenset(d)
    if x not in d | ctx.k1:
        raise ValueError(f"vertex {x} is not in d or k1")
    dk = d | ctx.k
    lprime = l_prime_set(ctx.tree, dk)
    uncov_set = uncov(ctx.tree, ctx.graph, dk)
    return _safe_vertex(ctx, dk, lprime, uncov_set, x, debug_full_scan)


def is_extendable(ctx: EnumContext, a: VertexSet, debug_full_scan: bool = False) -> bool:
    """Can the partial antichain a be completed into a feasible extension?

    Two polynomial checks: every uncovered up-region vertex must fall
    inside some clique of ℒ'(a∪k), and every vertex of a ∪ k1 must be
    safe.  Both are necessary and together sufficient.
    """
    a = frozenset(a)
    dk = a | ctx.k
    lprime = l_prime_set(ctx.tree, dk)
    open_region = set()
    for c in lprime:
        open_region |= ctx.tree.cliques[c]
    uncov_set = uncov(ctx.tree, ctx.graph, dk)
    if not uncov_set <= open_region:
        return False
    return all(_safe_vertex(ctx, dk, lprime, uncov_set, x, debug_full_scan) for x in a | ctx.k1)


def q_set(ctx: EnumContext, a: VertexSet, d: VertexSet, cp: int, scope: str = "antichain") -> VertexSet:
    """Vertices of a ∪ k1 that must receive their private neighbor inside
    V(cp) ∪ cp.

    A vertex escapes the obligation in two ways.  Either some private
    neighbor lies entirely outside the territory of cp and of every later
    clique — no remaining combination step can add a vertex next to it, so
    it is permanently secured (this covers the up-region, the regions of
    already-processed cliques, and side regions the extension never
    enters).  Or some private sits in a later clique's territory and is
    safe, so a future step can still commit it.  `scope` selects which
    cliques "later" ranges over: the antichain's home cliques (default) or
    every clique of the tree (kept for differential comparison).
    """
    a = frozenset(a)
    d = frozenset(d)
    g, tree = ctx.graph, ctx.tree
    dk = d | ctx.k
    if scope == "antichain":
        region = sorted(home_cliques(tree, a))
    elif scope == "all":
        region = range(len(tree))
    else:
        raise ValueError(f"unknown scope {scope!r}")
    pre_cp = tree.pre[cp]
    later = [c for c in region if tree.pre[c] > pre_cp]
    territory = tree.vertices_below(cp) | tree.cliques[cp]
    later_territory = [tree.vertices_below(c) | tree.cliques[c] for c in later]
    for t in later_territory:
        territory = territory | t
    lprime = l_prime_set(tree, dk)
    uncov_set = uncov(tree, g, dk)

    out = set()
    # k2 members already hold a private neighbor secured at an outer level;
    # they carry no obligation and must never be promoted into K1'
    for x in sorted(a | ctx.k1):
        p = private_neighbors(g, dk, x)
        if any(y not in territory for y in p):
            continue
        deferrable = any(
            any(y in t for t in later_territory) and _safe_private(ctx, lprime, uncov_set, x, y)
            for y in p
        )
        if not deferrable:
            out.add(x)
    # An obligation can only be delegated to cp's subproblem for members of
    # cp itself; anyone else with no escape is already doomed on this branch
    # and will be rejected by the leaf feasibility check.
    return frozenset(out & tree.cliques[cp])


def c_star_high(ctx: EnumContext, a: VertexSet, d: VertexSet) -> Optional[int]:
    """Last antichain home clique whose below-region already received new
    vertices of d, or None when d is still bare."""
    tree = ctx.tree
    fresh = frozenset(d) - (frozenset(a) | ctx.k)
    best = None
    for c in home_cliques(tree, a):
        if fresh & tree.vertices_below(c):
            if best is None or tree.pre[c] > tree.pre[best]:
                best = c
    return best


def c_star_low(ctx: EnumContext, a: VertexSet, d: VertexSet) -> Optional[int]:
    """First antichain home clique whose below-region d does not yet
    dominate, or None when every region is covered."""
    g, tree = ctx.graph, ctx.tree
    dominated = 0
    for x in d:
        dominated |= g._nbr_mask[x]
    best = None
    for c in home_cliques(tree, a):
        if tree._below_masks[c] & ~dominated:
            if best is None or tree.pre[c] < tree.pre[best]:
                best = c
    return best
