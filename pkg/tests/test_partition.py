import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import helpers
import oracles
from mindist import Graph, WorkCounters, distance_field
from mindist.partition import (
    balanced_partition,
    classify_sides,
    resolve_rng,
    splitter_balance,
)


def _sides_from_oracle(g, v):
    dm = oracles.floyd_warshall(g.n, g.edges())
    return oracles.side_partition(dm, v)


@given(helpers.graphs(min_n=2), st.data())
def test_classify_sides_matches_oracle(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    side = classify_sides(distance_field(g, v))
    s_set, t_set = _sides_from_oracle(g, v)
    assert set(np.where(side == 1)[0].tolist()) == s_set
    assert set(np.where(side == -1)[0].tolist()) == t_set
    assert side[v] == 0


def test_classify_sides_breaks_ties_by_id():
    g = Graph(3, [])  # all distances INF, every pair ties
    side0 = classify_sides(distance_field(g, 0))
    side2 = classify_sides(distance_field(g, 2))
    assert side0.tolist() == [0, -1, -1]
    assert side2.tolist() == [1, 1, 0]


@given(helpers.graphs(min_n=2))
def test_sides_are_antisymmetric(g):
    sides = {v: classify_sides(distance_field(g, v)) for v in range(g.n)}
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                assert (sides[v][u] == 1) == (sides[u][v] == -1)


@given(helpers.graphs(min_n=2), st.integers(1, 6), st.integers(0, 2**32))
def test_partition_invariants(g, q, seed):
    part = balanced_partition(g, q, resolve_rng(seed)[0])
    w_set = set(part.splitters)
    assert len(part.splitters) == min(q, g.n - 1)
    assert len(w_set) == len(part.splitters)
    covered: set[int] = set()
    for block in part.parts:
        assert block == sorted(block)
        assert not (set(block) & covered)
        covered.update(block)
    assert covered == set(range(g.n)) - w_set
    for v in range(g.n):
        if v in w_set:
            assert part.part_of[v] == -1
        else:
            assert v in part.parts[int(part.part_of[v])]
    # Side arrays agree with the exhaustive oracle.
    dm = oracles.floyd_warshall(g.n, g.edges())
    for w in part.splitters:
        s_set, t_set = oracles.side_partition(dm, w)
        side = part.sides[w]
        assert set(np.where(side == 1)[0].tolist()) == s_set
        assert set(np.where(side == -1)[0].tolist()) == t_set


@given(helpers.graphs(min_n=2), st.integers(1, 6), st.integers(0, 2**32))
def test_parts_are_side_homogeneous(g, q, seed):
    part = balanced_partition(g, q, resolve_rng(seed)[0])
    for block in part.parts:
        for w in part.splitters:
            vals = {int(part.sides[w][u]) for u in block}
            assert len(vals) == 1 and vals <= {1, -1}


@given(helpers.graphs(min_n=3), st.integers(1, 6), st.integers(0, 2**32))
def test_distinct_parts_are_separated_by_some_splitter(g, q, seed):
    part = balanced_partition(g, q, resolve_rng(seed)[0])
    for i in range(len(part.parts)):
        for j in range(i + 1, len(part.parts)):
            a = part.parts[i][0]
            b = part.parts[j][0]
            assert any(
                int(part.sides[w][a]) * int(part.sides[w][b]) == -1
                for w in part.splitters
            )


@given(helpers.graphs(min_n=2), st.integers(1, 6), st.integers(0, 2**32))
def test_parts_refine_coarse_parts(g, q, seed):
    part = balanced_partition(g, q, resolve_rng(seed)[0])
    coarse_of = {}
    for i, block in enumerate(part.coarse_parts):
        for v in block:
            coarse_of[v] = i
    assert sorted(coarse_of) == sorted(
        v for block in part.parts for v in block
    )
    for block in part.parts:
        assert len({coarse_of[v] for v in block}) == 1


def test_same_seed_reproduces_partition():
    g = helpers.random_digraph(21, n=40, m=160)
    a = balanced_partition(g, 6, resolve_rng(77)[0])
    b = balanced_partition(g, 6, resolve_rng(77)[0])
    assert a.splitters == b.splitters
    assert a.parts == b.parts
    assert a.coarse_parts == b.coarse_parts


def test_counters_record_candidate_searches():
    g = helpers.random_digraph(4, n=30, m=120)
    counters = WorkCounters()
    balanced_partition(g, 5, resolve_rng(5)[0], counters)
    # Each evaluated candidate costs one field = two searches.
    assert counters.dijkstra_runs >= 2 * 5
    assert counters.dijkstra_runs % 2 == 0


class _StubbornRng:
    """Always proposes index 0, forcing the deterministic fallback scan."""

    def randrange(self, k):
        return 0


def test_fallback_scan_finds_a_balanced_splitter():
    n = 19
    g = Graph(n, [(i, i + 1, 1) for i in range(n - 1)])
    part = balanced_partition(g, 1, _StubbornRng())
    assert part.fallback_scans == 1
    # Vertex 0 splits the path 0/18, rejected; 2 splits it 2/16, accepted.
    assert part.splitters == [2]
    s, t = splitter_balance(part.sides[2], np.arange(n))
    assert min(s, t) >= (n - 1) // 9


def test_zero_splits_yield_single_part():
    g = helpers.random_digraph(8, n=10, m=30)
    part = balanced_partition(g, 0, resolve_rng(1)[0])
    assert part.splitters == []
    assert part.parts == [list(range(10))]


def test_single_vertex_graph():
    part = balanced_partition(Graph(1, []), 3, resolve_rng(1)[0])
    assert part.splitters == []
    assert part.parts == [[0]]


def test_resolve_rng_accepts_ints_and_generators():
    import random

    gen, seed = resolve_rng(123)
    assert seed == 123
    base = random.Random(9)
    gen1, seed1 = resolve_rng(base)
    gen2, seed2 = resolve_rng(random.Random(9))
    assert seed1 == seed2
    assert gen1.random() == gen2.random()
    with pytest.raises(ValueError):
        resolve_rng("not a seed")
