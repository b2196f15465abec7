"""Shared builders and hypothesis strategies."""

from __future__ import annotations

from random import Random

import pytest
from hypothesis import strategies as st

from certigraph import Graph


# -- deterministic builders ---------------------------------------------------------


def path_graph(k: int) -> Graph:
    return Graph.build(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return Graph.build(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph.build(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def star_graph(k: int) -> Graph:
    """K_{1,k-1} with the hub at 0."""
    return Graph.build(k, [(0, i) for i in range(1, k)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def colored(g: Graph, colors) -> Graph:
    return g.with_colors(list(colors))


# -- hypothesis strategies ----------------------------------------------------------


@st.composite
def multigraphs(draw, max_n=8, max_m=14, loops=True, parallels=True, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return Graph.build(0, [])
    m = draw(st.integers(min_value=0, max_value=max_m))
    pairs = []
    seen = set()
    for _ in range(m):
        u = draw(st.integers(min_value=0, max_value=n - 1))
        v = draw(st.integers(min_value=0, max_value=n - 1))
        if u == v and not loops:
            continue
        key = (min(u, v), max(u, v))
        if not parallels and key in seen:
            continue
        seen.add(key)
        pairs.append((u, v))
    return Graph.build(n, pairs)


@st.composite
def simple_graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
                  if pairs else st.just([]))
    return Graph.build(n, sorted(chosen))


@st.composite
def colored_multigraphs(draw, max_n=7, max_m=12, max_colors=4, min_n=1):
    g = draw(multigraphs(max_n=max_n, max_m=max_m, min_n=min_n))
    if not g.edges:
        return g
    k = draw(st.integers(min_value=1, max_value=max_colors))
    cols = draw(st.lists(st.integers(min_value=0, max_value=k - 1),
                         min_size=len(g.edges), max_size=len(g.edges)))
    return g.with_colors(cols)


@st.composite
def connected_colored_graphs(draw, max_n=7, max_extra=6, max_colors=3, min_n=2):
    """Connected by construction: a random spanning tree plus extra edges,
    then colored."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = []
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        pairs.append((u, v))
    extra = draw(st.integers(min_value=0, max_value=max_extra))
    for _ in range(extra):
        u = draw(st.integers(min_value=0, max_value=n - 1))
        v = draw(st.integers(min_value=0, max_value=n - 1))
        if u != v:
            pairs.append((min(u, v), max(u, v)))
    k = draw(st.integers(min_value=1, max_value=max_colors))
    cols = draw(st.lists(st.integers(min_value=0, max_value=k - 1),
                         min_size=len(pairs), max_size=len(pairs)))
    return Graph.build(n, pairs).with_colors(cols)


# -- seeded samples (cheaper than hypothesis for sweep-style tests) -------------------


def seeded_random_graphs(count: int, n: int, p: float, seed: int):
    from certigraph import random_graph

    return [random_graph(n, p, seed + i) for i in range(count)]


def seeded_random_colored(count: int, n: int, p: float, k: int, seed: int):
    from certigraph import random_graph

    rng = Random(seed)
    out = []
    made = 0
    while made < count:
        g = random_graph(n, p, rng.randrange(1 << 30))
        if not g.edges:
            continue
        out.append(g.with_colors([rng.randrange(k) for _ in g.edges]))
        made += 1
    return out


@pytest.fixture(scope="session")
def all_n4_graphs():
    from certigraph import enumerate_labeled_graphs

    return list(enumerate_labeled_graphs(4))


@pytest.fixture(scope="session")
def all_n5_graphs():
    from certigraph import enumerate_labeled_graphs

    return list(enumerate_labeled_graphs(5))
