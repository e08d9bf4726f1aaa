"""Extension machinery: witnesses, safety, extendability, and the
combination bookkeeping sets.

Frozen values on the five-vertex fixture were derived by hand-tracing the
definitions; corpus-wide properties are checked against brute force.
"""

from itertools import combinations

import pytest

from chordal_mds import (
    EnumContext,
    brute_force_minimal_dominating_sets,
    build_clique_tree,
    build_graph,
    c_star_high,
    c_star_low,
    closed_neighborhood_of_set,
    is_antichain,
    is_extendable,
    is_irredundant,
    is_minimal_dominating,
    is_partial_antichain,
    is_safe_private,
    is_safe_vertex,
    l_prime_set,
    l_set,
    private_neighbors,
    private_witness,
    q_set,
    uncov,
)
from chordal_mds.extension import f_cliques
from chordal_mds.graph import induced_subgraph

from conftest import complete_graph, e1_graph, random_corpus

CORPUS_20 = random_corpus(30, max_n=20, min_n=5)
CORPUS_SMALL = random_corpus(12, max_n=8, min_n=4)


@pytest.fixture(scope="module")
def e1_ctx():
    g = e1_graph()
    return EnumContext(g, build_clique_tree(g))


def clique_index(tree, members):
    return tree.cliques.index(frozenset(members))


class TestEnumContext:
    def test_rejects_overlapping_k(self, e1_ctx):
        with pytest.raises(ValueError):
            EnumContext(e1_ctx.graph, e1_ctx.tree, frozenset({1}), frozenset({1}))

    def test_rejects_k_outside_root(self, e1_ctx):
        with pytest.raises(ValueError):
            EnumContext(e1_ctx.graph, e1_ctx.tree, frozenset({4}), frozenset())

    def test_k_union(self, e1_ctx):
        ctx = EnumContext(e1_ctx.graph, e1_ctx.tree, frozenset({0}), frozenset({1}))
        assert ctx.k == frozenset({0, 1})


class TestWitnesses:
    def test_f_cliques_frozen(self, e1_ctx):
        t = e1_ctx.tree
        i3, i4 = clique_index(t, {1, 3}), clique_index(t, {3, 4})
        assert f_cliques(e1_ctx, i3, 1) == frozenset({i4})
        assert f_cliques(e1_ctx, i4, 3) == frozenset()

    def test_witness_frozen_values(self, e1_ctx):
        t = e1_ctx.tree
        i3, i4 = clique_index(t, {1, 3}), clique_index(t, {3, 4})
        w = private_witness(e1_ctx, i3, 1)
        assert w.z_part == frozenset({4}) and w.greedy_part == frozenset()
        assert private_witness(e1_ctx, i4, 3).dset == frozenset()
        # x = a outside the clique: greedy shrink of G[{d, e}] drops d first
        # (it stays dominated by e), leaving {e}
        out = private_witness(e1_ctx, i3, 0)
        assert out.anchor is None
        assert out.dset == frozenset({4})

    def test_witness_memoized(self, e1_ctx):
        i3 = clique_index(e1_ctx.tree, {1, 3})
        assert private_witness(e1_ctx, i3, 1) is private_witness(e1_ctx, i3, 1)

    def test_witness_structure_and_properties_corpus(self):
        # irredundance in G[V(C)], domination of V(C)\N[x], and the z-part
        # shape, for every clique/vertex pair
        for g, *_ in CORPUS_20:
            tree = build_clique_tree(g)
            ctx = EnumContext(g, tree)
            for c in range(len(tree)):
                below = tree.vertices_below(c)
                sub, old_to_new, _ = induced_subgraph(g, below)
                for x in range(g.n):
                    w = private_witness(ctx, c, x)
                    d = w.dset
                    assert d <= below
                    if below:
                        assert is_irredundant(sub, frozenset(old_to_new[v] for v in d))
                    target = below - closed_neighborhood_of_set(g, {x}) if x in tree.cliques[c] else below
                    assert target <= closed_neighborhood_of_set(g, d) if d else not target
                    if x in tree.cliques[c]:
                        fc = f_cliques(ctx, c, x)
                        assert len(w.z_part) == len(fc)
                        for cp in fc:
                            assert len(w.z_part & tree.fsets[cp]) == 1
                        assert not (w.greedy_part & closed_neighborhood_of_set(g, w.z_part)) if w.z_part else True
                    else:
                        assert w.z_part == frozenset()
                        sub_d = frozenset(old_to_new[v] for v in d)
                        if below:
                            assert is_minimal_dominating(sub, sub_d)


class TestSafety:
    def test_frozen_safe_private(self, e1_ctx):
        assert is_safe_private(e1_ctx, frozenset({1}), 1, 1)   # x == y
        assert is_safe_private(e1_ctx, frozenset({1}), 1, 2)
        assert not is_safe_private(e1_ctx, frozenset({1}), 1, 3)

    def test_preconditions(self, e1_ctx):
        with pytest.raises(ValueError):
            is_safe_private(e1_ctx, frozenset({1}), 0, 2)      # x not in d
        with pytest.raises(ValueError):
            is_safe_private(e1_ctx, frozenset({1, 3}), 1, 3)   # y not private

    def test_frozen_safe_vertex(self, e1_ctx):
        g, t = e1_ctx.graph, e1_ctx.tree
        assert is_safe_vertex(e1_ctx, frozenset({1}), 1)
        ctx_k2 = EnumContext(g, t, frozenset(), frozenset({1}))
        assert is_safe_vertex(ctx_k2, frozenset({1, 3}), 3)
        assert not is_safe_vertex(ctx_k2, frozenset({1, 2}), 2)

    def test_property4_for_safe_privates(self):
        # for accepted (d, x, y): every open-region clique holding y is fully
        # dominated by the witness D_C(y), apart from y itself
        for g, *_ in CORPUS_SMALL:
            tree = build_clique_tree(g)
            ctx = EnumContext(g, tree)
            for size in range(1, 3):
                for d in combinations(range(g.n), size):
                    d = frozenset(d)
                    for x in d:
                        for y in private_neighbors(g, d, x):
                            if x == y or not is_safe_private(ctx, d, x, y):
                                continue
                            for c in l_prime_set(tree, d):
                                if y not in tree.cliques[c]:
                                    continue
                                w = private_witness(ctx, c, y).dset
                                covered = closed_neighborhood_of_set(g, w) if w else frozenset()
                                assert tree.vertices_below(c) - {y} <= covered

    def test_rejected_private_never_survives(self):
        # if y is rejected for (d, x), no minimal dominating superset of d
        # keeps y private for x
        for g, *_ in CORPUS_SMALL[:8]:
            tree = build_clique_tree(g)
            ctx = EnumContext(g, tree)
            oracle = brute_force_minimal_dominating_sets(g)
            for size in range(1, 3):
                for a in combinations(range(g.n), size):
                    a = frozenset(a)
                    if not (is_antichain(tree, g, frozenset(), a) and is_extendable(ctx, a)):
                        continue
                    for x in a:
                        for y in private_neighbors(g, a, x):
                            if x == y or is_safe_private(ctx, a, x, y):
                                continue
                            for dp in oracle:
                                if a <= dp and x in dp:
                                    assert y not in private_neighbors(g, dp, x)

    def test_debug_full_scan_agrees(self):
        for g, *_ in CORPUS_SMALL:
            tree = build_clique_tree(g)
            ctx = EnumContext(g, tree)
            for x in range(g.n):
                is_safe_vertex(ctx, frozenset({x}), x, debug_full_scan=True)


def feasible_extension_exists(ctx, a):
    """Exhaustive oracle: some d ⊇ a ∪ k, confined to the open regions,
    dominating with a private neighbor for every member outside k2."""
    g, tree = ctx.graph, ctx.tree
    pool = set()
    for c in l_set(tree, a | ctx.k):
        pool |= tree.vertices_below(c)
    pool -= a | ctx.k
    pool = sorted(pool)
    base = a | ctx.k
    for size in range(len(pool) + 1):
        for extra in combinations(pool, size):
            d = base | frozenset(extra)
            if not closed_neighborhood_of_set(g, d) >= frozenset(range(g.n)):
                continue
            if all(private_neighbors(g, d, x) for x in d - ctx.k2):
                return True
    return False


class TestExtendable:
    def test_frozen_e1(self, e1_ctx):
        assert is_extendable(e1_ctx, frozenset())
        assert is_extendable(e1_ctx, frozenset({1}))
        assert not is_extendable(e1_ctx, frozenset({2}))
        assert not is_extendable(e1_ctx, frozenset({2, 3}))

    def test_matches_oracle_small(self):
        for g, *_ in CORPUS_SMALL[:8]:
            tree = build_clique_tree(g)
            root_clique = sorted(tree.cliques[tree.root])
            k_choices = [(frozenset(), frozenset())]
            for k_size in range(1, min(2, len(root_clique)) + 1):
                for ks in combinations(root_clique, k_size):
                    k_choices.append((frozenset(ks), frozenset()))
                    k_choices.append((frozenset(), frozenset(ks)))
            for k1, k2 in k_choices:
                ctx = EnumContext(g, tree, k1, k2)
                for size in range(0, 3):
                    for a in combinations(range(g.n), size):
                        a = frozenset(a)
                        # the enumeration draws antichain vertices from the
                        # open regions only, never from the committed sets
                        if a & ctx.k or not is_partial_antichain(tree, g, ctx.k, a):
                            continue
                        assert is_extendable(ctx, a) == feasible_extension_exists(ctx, a), (
                            g,
                            sorted(a),
                            sorted(k1),
                            sorted(k2),
                        )


class TestQSet:
    def test_frozen_e1(self, e1_ctx):
        c1 = clique_index(e1_ctx.tree, {0, 1})
        # b's only home clique is the root: nothing later to defer to and b's
        # privates all sit inside the root's territory, so b stays obligated
        assert q_set(e1_ctx, frozenset({1}), frozenset({1}), c1) == frozenset({1})

    def test_single_clique(self):
        g = complete_graph(3)
        tree = build_clique_tree(g)
        ctx = EnumContext(g, tree)
        assert q_set(ctx, frozenset({0}), frozenset({0}), tree.root) == frozenset({0})

    def test_members_lie_in_target_clique(self):
        for g, *_ in CORPUS_SMALL:
            tree = build_clique_tree(g)
            ctx = EnumContext(g, tree)
            for x in range(g.n):
                a = frozenset({x})
                if not is_antichain(tree, g, frozenset(), a):
                    continue
                for c in sorted({tree.home[x]}):
                    assert q_set(ctx, a, a, c) <= tree.cliques[c]

    def test_unknown_scope_rejected(self, e1_ctx):
        c1 = clique_index(e1_ctx.tree, {0, 1})
        with pytest.raises(ValueError):
            q_set(e1_ctx, frozenset({1}), frozenset({1}), c1, scope="bogus")


class TestCStar:
    def test_frozen_e1(self, e1_ctx):
        t = e1_ctx.tree
        c1 = clique_index(t, {0, 1})
        a = frozenset({1})
        assert c_star_low(e1_ctx, a, frozenset({1})) == c1
        assert c_star_low(e1_ctx, a, frozenset({1, 3, 4})) is None
        assert c_star_high(e1_ctx, a, frozenset({1})) is None
        assert c_star_high(e1_ctx, a, frozenset({1, 4})) == c1
