"""Shared fixtures: small named graphs and corpus builders."""

from __future__ import annotations

import pytest

from chordal_mds import build_graph, build_clique_tree, random_chordal


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def star_graph(k):
    """K_{1,k}: center 0, leaves 1..k."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def corona_graph(k):
    """K_k with one pendant vertex per clique vertex (2k vertices)."""
    edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
    edges += [(v, k + v) for v in range(k)]
    return build_graph(2 * k, edges)


def e1_graph():
    """Five-vertex tree a-b, b-c, b-d, d-e with ids a..e = 0..4."""
    labels = dict(enumerate("abcde"))
    return build_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)], labels)


def random_corpus(count, max_n, densities=(0.2, 0.5, 0.9), min_n=4, seed0=0):
    """Deterministic list of (graph, n, density, seed) tuples."""
    out = []
    seed = seed0
    while len(out) < count:
        for density in densities:
            if len(out) >= count:
                break
            n = min_n + seed % (max_n - min_n + 1)
            out.append((random_chordal(n, density, seed), n, density, seed))
        seed += 1
    return out


@pytest.fixture(scope="session")
def e1():
    return e1_graph()


@pytest.fixture(scope="session")
def e1_tree(e1):
    return build_clique_tree(e1)
