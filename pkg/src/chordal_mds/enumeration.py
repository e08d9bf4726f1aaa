"""Nested enumeration of minimal dominating sets over a clique tree.

Three generators, each with polynomial delay and polynomial space:

* enum_antichains — backtracking over extendable partial antichains, adding
  vertices in increasing number;
* enum_combinations — given an emitted antichain, walks its home cliques in
  preorder, recursing into the subproblem of the first clique whose region
  is not yet dominated;
* enum_k_extensions — composes the two; with empty committed sets on the
  whole graph it yields exactly the minimal dominating sets.

Emission order is depth-first with children in ascending vertex-number
order, so output is deterministic for a fixed graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .graph import Graph, VertexSet
from .clique_tree import (
    NotChordalError,
    build_clique_tree,
    CliqueTree,
    is_antichain,
    is_partial_antichain,
    l_set,
    subproblem,
)
from .extension import EnumContext, c_star_low, is_extendable, q_set

SolutionSink = Callable[[VertexSet], None]


@dataclass
class EnumerationStats:
    """Recursion accounting threaded through one enumeration.

    Depth grows by one per antichain vertex added and per combination step
    taken, across all nesting levels; it never exceeds twice the vertex
    count.  `min_k_recursive` tracks the smallest committed-set size seen
    at a recursive subproblem entry (it must stay positive).
    """

    depth: int = 0
    max_depth: int = 0
    antichains: int = 0
    outputs: int = 0
    min_k_recursive: Optional[int] = None

    def _push(self):
        self.depth += 1
        if self.depth > self.max_depth:
            self.max_depth = self.depth

    def _pop(self):
        self.depth -= 1

    def _enter_subproblem(self, k_size: int):
        if self.min_k_recursive is None or k_size < self.min_k_recursive:
            self.min_k_recursive = k_size


def _antichain_pool(ctx: EnumContext) -> list:
    """Vertices an antichain may draw from: the regions still open below
    the committed set, in ascending vertex number.

    Keeping antichain members out of other territory is what makes each
    solution's top antichain reproduce A exactly, and hence each solution
    appear once.
    """
    tree = ctx.tree
    pool = set()
    for c in l_set(tree, ctx.k):
        pool |= tree.vertices_below(c)
    return sorted(pool, key=lambda v: tree.vnum[v])


def enum_antichains(
    ctx: EnumContext,
    a: VertexSet = frozenset(),
    stats: Optional[EnumerationStats] = None,
    literal: bool = False,
) -> Iterator[VertexSet]:
    """All extendable antichains having the extendable partial antichain
    `a` as a prefix, depth-first."""
    if stats is None:
        stats = EnumerationStats()
    pool = _antichain_pool(ctx)
    pool_set = frozenset(pool)
    yield from _enum_antichains(ctx, a, pool, pool_set, stats, literal)


def _enum_antichains(ctx, a, pool, pool_set, stats, literal):
    g, tree = ctx.graph, ctx.tree
    if is_antichain(tree, g, ctx.k, a, literal=literal):
        stats.antichains += 1
        yield a
    tail = tree.tail(a)
    for z in pool:
        if tree.vnum[z] <= tail:
            continue
        grown = a | {z}
        if is_partial_antichain(tree, g, ctx.k, grown, pool=pool_set) and is_extendable(ctx, grown):
            stats._push()
            yield from _enum_antichains(ctx, grown, pool, pool_set, stats, literal)
            stats._pop()


def enum_combinations(
    ctx: EnumContext,
    a: VertexSet,
    d: VertexSet,
    stats: Optional[EnumerationStats] = None,
    literal: bool = False,
) -> Iterator[VertexSet]:
    """All feasible extensions of the antichain `a` that contain the partial
    extension `d` (initially a ∪ k), one region at a time.

    The base case re-verifies feasibility against this level's graph.  A
    subproblem can certify a private neighbor inside a shared clique that
    is in fact dominated from outside its world, so a leaf combination may
    be infeasible here even though every piece was feasible below; such
    leaves are dropped.  Every genuinely feasible extension decomposes into
    sub-feasible pieces, so nothing real is lost.
    """
    if stats is None:
        stats = EnumerationStats()
    target = c_star_low(ctx, a, d)
    if target is None:
        if _is_feasible(ctx, d):
            stats.outputs += 1
            yield d
        return
    k1p = q_set(ctx, a, d, target)
    k2p = ((a | ctx.k) & ctx.tree.cliques[target]) - k1p
    sub_g, sub_tree, old_to_new, new_to_old = subproblem(ctx.tree, target)
    sub_ctx = EnumContext(
        sub_g,
        sub_tree,
        frozenset(old_to_new[x] for x in k1p),
        frozenset(old_to_new[x] for x in k2p),
    )
    stats._enter_subproblem(len(k1p | k2p))
    for sub_d in enum_k_extensions(sub_ctx, stats, literal=literal):
        grown = d | frozenset(new_to_old[x] for x in sub_d)
        stats._push()
        yield from enum_combinations(ctx, a, grown, stats, literal=literal)
        stats._pop()


def _is_feasible(ctx: EnumContext, d: VertexSet) -> bool:
    """Feasible extension test: dominating, and every member outside k2
    keeps a private neighbor."""
    g = ctx.graph
    nbr = g._nbr_mask
    cover = 0
    dmask = 0
    for x in d:
        cover |= nbr[x]
        dmask |= 1 << x
    if cover != g._full_mask:
        return False
    for x in d - ctx.k2:
        bit = 1 << x
        if nbr[x] & dmask == bit:
            continue
        if not any(nbr[y] & dmask == bit for y in g.adj[x]):
            return False
    return True


def enum_k_extensions(
    ctx: EnumContext,
    stats: Optional[EnumerationStats] = None,
    literal: bool = False,
) -> Iterator[VertexSet]:
    """All feasible extensions for the committed sets of ctx, each exactly
    once, grouped by top antichain."""
    if stats is None:
        stats = EnumerationStats()
    if not is_extendable(ctx, frozenset()):
        return
    for a in enum_antichains(ctx, frozenset(), stats, literal=literal):
        yield from enum_combinations(ctx, a, a | ctx.k, stats, literal=literal)


def iter_minimal_dominating_sets(
    g: Graph,
    tree: Optional[CliqueTree] = None,
    stats: Optional[EnumerationStats] = None,
    literal: bool = False,
) -> Iterator[VertexSet]:
    """Minimal dominating sets of a chordal graph, streamed.

    Raises NotChordalError before the first emission when g is not
    chordal.  A caller-supplied clique tree (any valid one) may replace
    the default construction.
    """
    if g.n == 0:
        yield frozenset()
        return
    if tree is None:
        tree = build_clique_tree(g)
    elif tree.graph != g:
        raise ValueError("clique tree belongs to a different graph")
    ctx = EnumContext(g, tree)
    yield from enum_k_extensions(ctx, stats, literal=literal)


def enum_minimal_dominating_sets(
    g: Graph,
    sink: SolutionSink,
    tree: Optional[CliqueTree] = None,
    limit: Optional[int] = None,
    stats: Optional[EnumerationStats] = None,
) -> int:
    """Drive the streaming enumerator into a sink; returns the emission
    count.  `limit` stops cleanly after that many solutions."""
    count = 0
    for d in iter_minimal_dominating_sets(g, tree=tree, stats=stats):
        sink(d)
        count += 1
        if limit is not None and count >= limit:
            break
    return count
