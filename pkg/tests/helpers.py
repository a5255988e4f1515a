"""Shared graph builders and hypothesis strategies for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from mindist import Graph


def random_digraph(
    seed: int, n: int, m: int, wlo: int = 1, whi: int = 10
) -> Graph:
    """Random simple digraph: m distinct arcs (or all, if fewer exist)."""
    rng = random.Random(seed)
    cap = n * (n - 1)
    m = min(m, cap)
    arcs: set[tuple[int, int]] = set()
    while len(arcs) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            arcs.add((u, v))
    return Graph(n, [(u, v, rng.randint(wlo, whi)) for u, v in sorted(arcs)])


def random_strongly_connected(
    seed: int, n: int, extra: int, wlo: int = 1, whi: int = 10
) -> Graph:
    """Random Hamiltonian cycle (so strongly connected) plus extra arcs."""
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = []
    for i in range(n):
        u, v = perm[i], perm[(i + 1) % n]
        if u != v:
            edges.append((u, v, rng.randint(wlo, whi)))
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.append((u, v, rng.randint(wlo, whi)))
    return Graph(n, edges)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 12, max_w: int = 16):
    """Arbitrary small digraphs (possibly disconnected, empty, dense)."""
    n = draw(st.integers(min_n, max_n))
    arcs = st.tuples(
        st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, max_w)
    )
    raw = draw(st.lists(arcs, max_size=4 * n))
    return Graph(n, [(u, v, w) for u, v, w in raw if u != v])


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 10, max_w: int = 12):
    """Small strongly connected digraphs (cycle backbone plus extras)."""
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(n)))
    edges = []
    for i in range(n):
        u, v = perm[i], perm[(i + 1) % n]
        edges.append((u, v, draw(st.integers(1, max_w))))
    arcs = st.tuples(
        st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, max_w)
    )
    raw = draw(st.lists(arcs, max_size=3 * n))
    edges.extend((u, v, w) for u, v, w in raw if u != v)
    return Graph(n, edges)
