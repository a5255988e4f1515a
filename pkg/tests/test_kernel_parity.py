"""The compiled and pure-Python kernels must agree bit for bit."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import helpers
from mindist import INF
from mindist.shortest_paths import kernel_module

compiled = pytest.importorskip(
    "mindist._kernel", reason="compiled kernel not built"
)
pure = kernel_module("py")


def _run(mod, g, source, wcap):
    return mod.dijkstra_csr(g.indptr, g.dst, g.wt, g.n, source, wcap)


def _assert_identical(g, source, wcap):
    dist_c, parent_c, pops_c, scans_c = _run(compiled, g, source, wcap)
    dist_p, parent_p, pops_p, scans_p = _run(pure, g, source, wcap)
    assert dist_c.tolist() == dist_p.tolist()
    assert parent_c.tolist() == parent_p.tolist()
    assert (pops_c, scans_c) == (pops_p, scans_p)


@given(helpers.graphs(), st.data())
def test_backends_agree_exactly(g, data):
    source = data.draw(st.integers(0, g.n - 1))
    wcap = data.draw(st.sampled_from([INF, 1, 3, 8]))
    _assert_identical(g, source, wcap)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_backends_agree_on_larger_graphs(seed):
    g = helpers.random_digraph(seed, n=300, m=1800, whi=50)
    for source in (0, 113, 299):
        _assert_identical(g, source, INF)
        _assert_identical(g, source, 25)


def test_backends_agree_with_heavy_ties():
    # Uniform weights maximize equal-distance ties, stressing heap order.
    g = helpers.random_digraph(9, n=120, m=900, wlo=1, whi=1)
    for source in range(0, 120, 17):
        _assert_identical(g, source, INF)
