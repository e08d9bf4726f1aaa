"""Immutable graph type plus domination / irredundancy primitives.

Vertices are dense integers 0..n-1; optional display labels live in a side
map and never participate in the algorithms.  All predicates here are pure
and a Graph is safe to share between threads once built.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

VertexSet = frozenset

BRUTE_FORCE_LIMIT = 20


class Graph:
    """Simple undirected loopless graph with frozenset adjacency."""

    __slots__ = ("n", "adj", "labels", "_nbr_mask", "_full_mask")

    def __init__(self, n: int, adj: Sequence[frozenset], labels: Optional[Mapping[int, str]] = None):
        self.n = n
        self.adj = tuple(adj)
        self.labels = dict(labels) if labels else None
        # closed-neighbourhood bitmasks back the exponential oracle and the
        # hot domination checks; harmless to precompute for small graphs too.
        self._nbr_mask = tuple((1 << v) | sum(1 << u for u in self.adj[v]) for v in range(n))
        self._full_mask = (1 << n) - 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={sum(len(a) for a in self.adj) // 2})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise ValueError(f"vertex {x} out of range [0, {self.n})")


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Optional[Mapping[int, str]] = None) -> Graph:
    """Build a Graph from an edge list, collapsing duplicates.

    Rejects endpoints outside [0, n) and self-loops.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, [frozenset(a) for a in adj], labels)


def closed_neighborhood(g: Graph, x: int) -> VertexSet:
    """N[x]: x together with its neighbors."""
    g.check_vertex(x)
    return frozenset(g.adj[x] | {x})


def closed_neighborhood_of_set(g: Graph, s: Iterable[int]) -> VertexSet:
    out = set()
    for x in s:
        g.check_vertex(x)
        out.add(x)
        out |= g.adj[x]
    return frozenset(out)


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True iff every vertex has a closed neighbor in d."""
    mask = 0
    for x in d:
        g.check_vertex(x)
        mask |= g._nbr_mask[x]
    return mask == g._full_mask


def set_mask(s: Iterable[int]) -> int:
    mask = 0
    for x in s:
        mask |= 1 << x
    return mask


def private_neighbors(g: Graph, d: Iterable[int], x: int) -> VertexSet:
    """Vertices whose closed neighborhood meets d exactly in {x}.

    Requires x in d: a vertex outside the set has no private neighbors by
    convention and asking for them is a contract violation.
    """
    ds = frozenset(d)
    if x not in ds:
        raise ValueError(f"vertex {x} is not a member of the set")
    dmask = set_mask(ds)
    bit = 1 << x
    nbr = g._nbr_mask
    out = [y for y in g.adj[x] if nbr[y] & dmask == bit]
    if nbr[x] & dmask == bit:
        out.append(x)
    return frozenset(out)


def is_irredundant(g: Graph, d: Iterable[int]) -> bool:
    ds = frozenset(d)
    return all(private_neighbors(g, ds, x) for x in ds)


def is_minimal_dominating(g: Graph, d: Iterable[int]) -> bool:
    """Dominating and every member keeps a private neighbor."""
    ds = frozenset(d)
    return is_dominating(g, ds) and is_irredundant(g, ds)


def greedy_minimal_dominating_set(g: Graph, order: Sequence[int]) -> VertexSet:
    """Shrink V to a minimal dominating set, deterministically.

    Starting from all of V, repeatedly drops the order-smallest vertex whose
    removal keeps the set dominating, until none can be dropped.
    """
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertex set")
    return greedy_minimal_dominating_subset(g, range(g.n), order)


def greedy_minimal_dominating_subset(g: Graph, world: Iterable[int], order: Sequence[int]) -> VertexSet:
    """Greedy minimal dominating set of the subgraph induced by `world`.

    Domination is judged inside the induced subgraph only; `order` ranks the
    vertices of `world` (extra entries are ignored).
    """
    w = frozenset(world)
    d = set(w)
    ranked = [x for x in order if x in w]
    changed = True
    while changed:
        changed = False
        for x in ranked:
            if x not in d:
                continue
            d.discard(x)
            if _dominates_within(g, d, w):
                changed = True
                break
            d.add(x)
    return frozenset(d)


def _dominates_within(g: Graph, d, world) -> bool:
    for y in world:
        if y not in d and not (g.adj[y] & d):
            return False
    return True


def brute_force_minimal_dominating_sets(g: Graph) -> list:
    """All minimal dominating sets by exhaustive subset scan.

    Guarded to n <= 20.  Output order is ascending cardinality, then
    lexicographic on the sorted vertex tuple, so golden files are stable.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {g.n}")
    nbr = g._nbr_mask
    full = g._full_mask
    result = []
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            cover = 0
            for x in combo:
                cover |= nbr[x]
            if cover != full:
                continue
            dmask = 0
            for x in combo:
                dmask |= 1 << x
            ok = True
            for x in combo:
                bit = 1 << x
                mm = nbr[x]
                has_private = False
                while mm:
                    low = mm & -mm
                    if nbr[low.bit_length() - 1] & dmask == bit:
                        has_private = True
                        break
                    mm ^= low
                if not has_private:
                    ok = False
                    break
            if ok:
                result.append(frozenset(combo))
    return result


def induced_subgraph(g: Graph, xs: Iterable[int]):
    """Subgraph induced by xs with dense re-ids.

    Returns (subgraph, old_to_new dict, new_to_old tuple); the id map is
    order-preserving on original ids.
    """
    keep = sorted(set(xs))
    for x in keep:
        g.check_vertex(x)
    old_to_new = {x: i for i, x in enumerate(keep)}
    adj = [frozenset(old_to_new[u] for u in g.adj[x] if u in old_to_new) for x in keep]
    labels = None
    if g.labels:
        labels = {old_to_new[x]: g.labels[x] for x in keep if x in g.labels}
    return Graph(len(keep), adj, labels), old_to_new, tuple(keep)
