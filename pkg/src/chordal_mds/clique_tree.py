"""Chordality recognition, clique trees, and all tree-relative set operators.

A clique tree is a rooted tree over the maximal cliques of a chordal graph
in which the cliques containing any vertex form a connected subtree.  Every
vertex has a unique *home* clique (the highest clique containing it), the
home sets partition V, and a depth-first preorder of the tree induces a
vertex numbering that the enumeration algorithms follow.

Determinism rules, applied everywhere so that golden outputs are stable:

* the root is the lexicographically smallest maximal clique containing the
  smallest vertex id;
* children are visited in order of their smallest contained id, ties broken
  lexicographically on the sorted clique;
* within a home set, vertices are numbered by ascending id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .graph import Graph, closed_neighborhood_of_set, induced_subgraph


@dataclass(frozen=True)
class NotChordal:
    """Negative recognition result; `cycle` is a chordless cycle witness when
    one was cheap to extract, else None."""

    cycle: Optional[tuple] = None


class NotChordalError(ValueError):
    def __init__(self, message="graph is not chordal", witness=None):
        super().__init__(message)
        self.witness = witness


class CliqueTreeError(ValueError):
    """An explicit clique-tree specification violated an invariant."""


def _mcs_order(g: Graph) -> list:
    """Maximum-cardinality search visit order, smallest-id tie-break."""
    weight = [0] * g.n
    visited = [False] * g.n
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not visited[v] and (best == -1 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        order.append(best)
        for u in g.adj[best]:
            if not visited[u]:
                weight[u] += 1
    return order


def recognize_chordal(g: Graph) -> Union[list, NotChordal]:
    """Perfect elimination ordering of g, or a NotChordal value.

    The returned list orders vertices so that each one's later neighbors
    form a clique.  Failure carries a chordless cycle of length >= 4 when a
    breadth-first search finds one quickly.
    """
    peo = list(reversed(_mcs_order(g)))
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    for v in peo:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        w = min(later, key=lambda u: pos[u])
        for u in later:
            if u != w and u not in g.adj[w]:
                return NotChordal(_chordless_cycle(g, v, w, u))
    return peo


def _chordless_cycle(g: Graph, v, a, b):
    """Chordless cycle through v, a, b with a, b non-adjacent neighbors of v.

    Searches for a shortest a-b path avoiding N[v] \\ {a, b}; such a path is
    induced, and closing it through v yields a chordless cycle.
    """
    banned = (g.adj[v] | {v}) - {a, b}
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return tuple([v] + path)
        for y in g.adj[x]:
            if y not in banned and y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def _maximal_cliques_from_peo(g: Graph, peo: Sequence[int]) -> list:
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    cands = set()
    for v in peo:
        cands.add(frozenset({v} | {u for u in g.adj[v] if pos[u] > pos[v]}))
    cliques = [c for c in cands if not any(c < other for other in cands)]
    cliques.sort(key=lambda c: sorted(c))
    return cliques


def maximal_cliques(g: Graph) -> list:
    peo = recognize_chordal(g)
    if isinstance(peo, NotChordal):
        raise NotChordalError(witness=peo)
    return _maximal_cliques_from_peo(g, peo)


class CliqueTree:
    """Rooted clique tree with preorder numbering and derived maps.

    Do not call the constructor directly; use build_clique_tree or
    build_clique_tree_from_spec, which establish the invariants.
    """

    __slots__ = (
        "graph",
        "cliques",
        "parent",
        "children",
        "root",
        "order",
        "pre",
        "interval",
        "fsets",
        "home",
        "vnum",
        "vertex_by_num",
        "_witness_cache",
        "_subproblem_cache",
        "_below_cache",
        "_below_masks",
        "_clique_masks",
    )

    def __init__(self, graph: Graph, cliques: Sequence[frozenset], parent: Sequence[int], root: int):
        self.graph = graph
        self.cliques = tuple(frozenset(c) for c in cliques)
        self.parent = tuple(parent)
        self.root = root
        t = len(self.cliques)

        kids = [[] for _ in range(t)]
        for c, p in enumerate(self.parent):
            if p >= 0:
                kids[p].append(c)
        for p in range(t):
            kids[p].sort(key=lambda c: (min(self.cliques[c]), sorted(self.cliques[c])))
        self.children = tuple(tuple(k) for k in kids)

        # iterative preorder; ancestors get strictly smaller numbers and each
        # subtree occupies a contiguous preorder interval
        order = []
        pre = [0] * t
        interval = [(0, 0)] * t
        stack = [(root, False)]
        while stack:
            c, done = stack.pop()
            if done:
                interval[c] = (pre[c], len(order))
                continue
            order.append(c)
            pre[c] = len(order)
            stack.append((c, True))
            for child in reversed(self.children[c]):
                stack.append((child, False))
        self.order = tuple(order)
        self.pre = tuple(pre)
        self.interval = tuple(interval)

        fsets = [None] * t
        for c in range(t):
            if c == root:
                fsets[c] = self.cliques[c]
            else:
                fsets[c] = self.cliques[c] - self.cliques[self.parent[c]]
        self.fsets = tuple(fsets)

        home = [-1] * graph.n
        vnum = [-1] * graph.n
        vertex_by_num = [-1] * graph.n
        counter = 0
        for c in order:
            for v in sorted(fsets[c]):
                home[v] = c
                vnum[v] = counter
                vertex_by_num[counter] = v
                counter += 1
        self.home = tuple(home)
        self.vnum = tuple(vnum)
        self.vertex_by_num = tuple(vertex_by_num)
        self._witness_cache = {}
        self._subproblem_cache = {}
        self._below_cache = {}
        self._clique_masks = tuple(sum(1 << v for v in c) for c in self.cliques)
        below_masks = [0] * t
        for c in reversed(order):
            m = sum(1 << v for v in fsets[c])
            for child in self.children[c]:
                m |= below_masks[child]
            below_masks[c] = m
        self._below_masks = tuple(below_masks)

    def __len__(self):
        return len(self.cliques)

    def is_strict_ancestor(self, anc: int, desc: int) -> bool:
        lo, hi = self.interval[anc]
        return anc != desc and lo <= self.pre[desc] <= hi

    def is_ancestor_or_self(self, anc: int, desc: int) -> bool:
        lo, hi = self.interval[anc]
        return lo <= self.pre[desc] <= hi

    def incomparable(self, a: int, b: int) -> bool:
        return not self.is_ancestor_or_self(a, b) and not self.is_ancestor_or_self(b, a)

    def ancestors(self, c: int):
        """Proper ancestors of clique c, nearest first."""
        p = self.parent[c]
        while p >= 0:
            yield p
            p = self.parent[p]

    def subtree(self, c: int) -> list:
        """Clique indices in the subtree of c, in preorder."""
        lo, hi = self.interval[c]
        return [k for k in self.order[lo - 1 : hi]]

    def vertices_below(self, c: int) -> frozenset:
        """V(C): vertices homed in the subtree rooted at c (memoized)."""
        cached = self._below_cache.get(c)
        if cached is None:
            out = set()
            for k in self.subtree(c):
                out |= self.fsets[k]
            cached = self._below_cache[c] = frozenset(out)
        return cached

    def tail(self, s: Iterable[int]) -> int:
        """Largest vertex number in s; -1 for the empty set."""
        return max((self.vnum[x] for x in s), default=-1)


def _prim_clique_tree_edges(cliques: Sequence[frozenset]) -> list:
    """Deterministic maximum-weight spanning tree over clique intersections.

    A spanning tree of the clique graph satisfies the subtree property
    exactly when its total separator weight is maximum; disconnected graphs
    are stitched with zero-weight edges so a single rooted tree comes out.
    """
    t = len(cliques)
    if t == 0:
        return []
    attach = [-1] * t
    best = [-1] * t
    done = [False] * t
    done[0] = True
    for c in range(1, t):
        best[c] = len(cliques[0] & cliques[c])
        attach[c] = 0
    for _ in range(t - 1):
        nxt = -1
        for c in range(t):
            if not done[c] and (nxt == -1 or best[c] > best[nxt]):
                nxt = c
        done[nxt] = True
        for c in range(t):
            if not done[c]:
                w = len(cliques[nxt] & cliques[c])
                if w > best[c]:
                    best[c] = w
                    attach[c] = nxt
    return [(c, attach[c]) for c in range(1, t)]


def _root_tree(t: int, edges: list, root: int) -> list:
    adj = [[] for _ in range(t)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = [-2] * t
    parent[root] = -1
    queue = deque([root])
    while queue:
        c = queue.popleft()
        for d in adj[c]:
            if parent[d] == -2:
                parent[d] = c
                queue.append(d)
    return parent


def build_clique_tree(g: Graph) -> CliqueTree:
    """Clique tree of a chordal graph; deterministic for a fixed graph.

    Raises NotChordalError on non-chordal input.
    """
    peo = recognize_chordal(g)
    if isinstance(peo, NotChordal):
        raise NotChordalError(witness=peo)
    if g.n == 0:
        raise ValueError("empty graph has no clique tree")
    cliques = _maximal_cliques_from_peo(g, peo)
    edges = _prim_clique_tree_edges(cliques)
    root = min((c for c in range(len(cliques)) if 0 in cliques[c]), key=lambda c: sorted(cliques[c]))
    parent = _root_tree(len(cliques), edges, root)
    return CliqueTree(g, cliques, parent, root)


def reroot(tree: CliqueTree, new_root: int) -> CliqueTree:
    """Same tree edges, different root; yields another valid clique tree."""
    t = len(tree)
    edges = [(c, p) for c, p in enumerate(tree.parent) if p >= 0]
    parent = _root_tree(t, edges, new_root)
    return CliqueTree(tree.graph, tree.cliques, parent, new_root)


def build_clique_tree_from_spec(g: Graph, cliques: Sequence[Iterable[int]], parent: Sequence[int]) -> CliqueTree:
    """Validate an explicitly given clique tree and finish its numbering.

    Every structural invariant is checked and the first violated one is
    reported: the nodes must be exactly the maximal cliques of g, the tree
    must be a single rooted tree, the cliques containing each vertex must be
    connected, and the two separator properties of clique trees must hold.
    """
    cliques = [frozenset(c) for c in cliques]
    t = len(cliques)
    if len(parent) != t:
        raise CliqueTreeError("parent list length does not match clique count")

    roots = [c for c in range(t) if parent[c] < 0]
    if len(roots) != 1:
        raise CliqueTreeError(f"expected exactly one root, found {len(roots)}")
    root = roots[0]
    for c, p in enumerate(parent):
        if p >= t:
            raise CliqueTreeError(f"clique {c} has out-of-range parent {p}")

    # acyclicity / connectivity of the parent structure
    seen = set()
    for c in range(t):
        chain = []
        x = c
        while x >= 0 and x not in seen:
            chain.append(x)
            seen.add(x)
            x = parent[x]
        if x >= 0 and x in chain:
            raise CliqueTreeError("parent links contain a cycle")
    actual = set(maximal_cliques(g))
    if set(cliques) != actual:
        raise CliqueTreeError("node set differs from the maximal cliques of the graph")
    if len(set(cliques)) != t:
        raise CliqueTreeError("duplicate cliques in specification")

    # the home sets implied by (cliques, parent) must partition V before a
    # CliqueTree can even be numbered; a failure here already means some
    # vertex's cliques are disconnected
    counted = [0] * g.n
    for c in range(t):
        members = cliques[c] if c == root else cliques[c] - cliques[parent[c]]
        for v in members:
            counted[v] += 1
    for v, k in enumerate(counted):
        if k != 1:
            raise CliqueTreeError(f"cliques containing vertex {v} are disconnected")

    tree = CliqueTree(g, cliques, parent, root)
    _check_subtree_connectivity(tree)
    _check_separator_properties(tree)
    return tree


def _check_subtree_connectivity(tree: CliqueTree) -> None:
    g = tree.graph
    for v in range(g.n):
        holding = [c for c in range(len(tree)) if v in tree.cliques[c]]
        top = min(holding, key=lambda c: tree.pre[c])
        for c in holding:
            # walk upward; every step until `top` must still contain v
            x = c
            while x != top:
                x = tree.parent[x]
                if x < 0 or v not in tree.cliques[x]:
                    raise CliqueTreeError(f"cliques containing vertex {v} are disconnected")


def _check_separator_properties(tree: CliqueTree) -> None:
    g = tree.graph
    for c in range(len(tree)):
        below = tree.vertices_below(c)
        f = tree.fsets[c]
        if not f:
            raise CliqueTreeError(f"clique {c} is contained in its parent")
        for x in range(g.n):
            if x in below:
                continue
            hit = len(g.adj[x] & f)
            if hit not in (0, len(f)):
                raise CliqueTreeError(f"vertex {x} is adjacent to part of the home set of clique {c}")
    for a in range(len(tree)):
        for b in range(a + 1, len(tree)):
            if tree.incomparable(a, b):
                fa, fb = tree.fsets[a], tree.fsets[b]
                for x in fa:
                    if g.adj[x] & fb:
                        raise CliqueTreeError(f"edge between home sets of incomparable cliques {a} and {b}")


# ---------------------------------------------------------------------------
# tree-relative set operators
# ---------------------------------------------------------------------------


def home_cliques(tree: CliqueTree, s: Iterable[int]) -> frozenset:
    """Home cliques of the members of s."""
    return frozenset(tree.home[x] for x in s)


def up_set(tree: CliqueTree, s: Iterable[int]) -> frozenset:
    """Vertices homed strictly above the home cliques of s."""
    anc = set()
    for c in home_cliques(tree, s):
        for a in tree.ancestors(c):
            if a in anc:
                break
            anc.add(a)
    out = set()
    for a in anc:
        out |= tree.fsets[a]
    return frozenset(out)


def uncov(tree: CliqueTree, g: Graph, s: Iterable[int]) -> frozenset:
    """The part of the up-set that s does not dominate."""
    s = frozenset(s)
    return up_set(tree, s) - closed_neighborhood_of_set(g, s)


def top_antichain(tree: CliqueTree, s: Iterable[int]) -> frozenset:
    """Members of s homed in the upmost cliques among the home cliques of s."""
    s = frozenset(s)
    homes = home_cliques(tree, s)
    top = {
        c
        for c in homes
        if not any(other != c and tree.is_ancestor_or_self(other, c) for other in homes)
    }
    return frozenset(x for x in s if tree.home[x] in top)


def _marked_above(tree: CliqueTree, s: frozenset) -> set:
    """Cliques having a descendant (possibly themselves) among the home
    cliques of s."""
    marked = set()
    for c in home_cliques(tree, s):
        x = c
        while x >= 0 and x not in marked:
            marked.add(x)
            x = tree.parent[x]
    return marked


def l_set(tree: CliqueTree, s: Iterable[int]) -> frozenset:
    """Upmost cliques whose subtrees avoid the home cliques of s.

    For empty s this is the root alone, so the operator always describes
    the region still open for extension vertices.
    """
    s = frozenset(s)
    if not s:
        return frozenset({tree.root})
    marked = _marked_above(tree, s)
    return frozenset(c for c in range(len(tree)) if c not in marked and tree.parent[c] in marked)


def l_prime_set(tree: CliqueTree, s: Iterable[int]) -> frozenset:
    """Upmost cliques below the open region that avoid s entirely."""
    s = frozenset(s)
    out = set()
    stack = list(l_set(tree, s))
    while stack:
        c = stack.pop()
        if not (tree.cliques[c] & s):
            out.add(c)
        else:
            stack.extend(tree.children[c])
    return frozenset(out)


def _pairwise_incomparable(tree: CliqueTree, a: frozenset) -> bool:
    homes = list(home_cliques(tree, a))
    for i, c in enumerate(homes):
        for d in homes[i + 1 :]:
            if not tree.incomparable(c, d) and c != d:
                return False
    return True


def is_antichain(tree: CliqueTree, g: Graph, k: Iterable[int], a: Iterable[int], literal: bool = False) -> bool:
    """Antichain predicate over the clique tree.

    Members must be pairwise incomparable, and every vertex that is neither
    above the antichain nor already dominated by a ∪ k must see the
    antichain in its own clique or strictly above itself.  The domination
    exemption is what makes the predicate aware of the committed root-clique
    set k; `literal=True` drops the exemption (kept for documentation and
    the regression test around it).
    """
    a = frozenset(a)
    k = frozenset(k)
    root_clique = tree.cliques[tree.root]
    if not k <= root_clique:
        raise ValueError("k must be contained in the root clique")
    if not _pairwise_incomparable(tree, a):
        return False
    above = up_set(tree, a)
    dominated = 0
    for x in a | k:
        dominated |= g._nbr_mask[x]
    for z in range(g.n):
        if z in above:
            continue
        if not literal and dominated >> z & 1:
            continue
        if not _sees_antichain(tree, a, z):
            return False
    return True


def _sees_antichain(tree: CliqueTree, a: frozenset, z: int) -> bool:
    cz = tree.home[z]
    clique = tree.cliques[cz]
    for x in a:
        if x in clique or tree.is_strict_ancestor(tree.home[x], cz):
            return True
    return False


def is_partial_antichain(
    tree: CliqueTree,
    g: Graph,
    k: Iterable[int],
    a: Iterable[int],
    pool: Optional[frozenset] = None,
) -> bool:
    """Can a still grow (using vertices numbered past its tail) into an
    antichain?

    Checks pairwise incomparability and the absence of a dead obligation: a
    vertex z that violates the coverage condition and that no admissible
    later vertex can repair.  A repair either covers z's clique, dominates
    z, or pushes z above the antichain; it must itself stay incomparable
    with a.  `pool` optionally restricts repair candidates to the region
    the enumeration may actually draw from.
    """
    a = frozenset(a)
    k = frozenset(k)
    if not _pairwise_incomparable(tree, a):
        return False
    above = up_set(tree, a)
    dominated = 0
    for x in a | k:
        dominated |= g._nbr_mask[x]
    tail = tree.tail(a)
    candidates = None
    for z in range(g.n):
        if z in above or dominated >> z & 1 or _sees_antichain(tree, a, z):
            continue
        if candidates is None:
            universe = range(g.n) if pool is None else pool
            candidates = [
                w
                for w in universe
                if tree.vnum[w] > tail
                and all(
                    tree.home[x] == tree.home[w] or tree.incomparable(tree.home[x], tree.home[w])
                    for x in a
                )
            ]
        if not any(_repairs(tree, g, w, z) for w in candidates):
            return False
    return True


def _repairs(tree: CliqueTree, g: Graph, w: int, z: int) -> bool:
    cz = tree.home[z]
    return (
        w in tree.cliques[cz]
        or tree.is_strict_ancestor(tree.home[w], cz)
        or w in g.adj[z]
        or w == z
        or tree.is_strict_ancestor(cz, tree.home[w])
    )


def subproblem(tree: CliqueTree, c: int):
    """Restriction to V(C) ∪ C with the subtree of C re-rooted at C.

    The new root's home set is the whole clique C, numbering is recomputed,
    and both id maps are returned: (graph, tree, old_to_new, new_to_old).
    Results are cached on the tree, so nested enumerations share witness
    caches.
    """
    cached = tree._subproblem_cache.get(c)
    if cached is not None:
        return cached
    g = tree.graph
    world = tree.vertices_below(c) | tree.cliques[c]
    sub_g, old_to_new, new_to_old = induced_subgraph(g, world)
    sub_nodes = tree.subtree(c)
    index = {k: i for i, k in enumerate(sub_nodes)}
    sub_cliques = [frozenset(old_to_new[v] for v in tree.cliques[k]) for k in sub_nodes]
    sub_parent = [-1 if k == c else index[tree.parent[k]] for k in sub_nodes]
    sub_tree = CliqueTree(sub_g, sub_cliques, sub_parent, index[c])
    result = (sub_g, sub_tree, old_to_new, new_to_old)
    tree._subproblem_cache[c] = result
    return result
