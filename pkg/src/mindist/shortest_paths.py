"""Dijkstra searches, distance fields, and the exact parameter sweep.

The kernel backend is chosen at import: the compiled extension when it is
available, the pure-Python mirror otherwise. MINDIST_KERNEL=py|c forces one
backend (forcing "c" fails loudly if the extension is missing).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .counters import WorkCounters
from .graph import INF, Graph, condensation

_FORCED = os.environ.get("MINDIST_KERNEL", "").strip().lower()
if _FORCED == "py":
    from . import _kernel_py as _backend

    _BACKEND_NAME = "py"
elif _FORCED == "c":
    from . import _kernel as _backend  # type: ignore[no-redef]

    _BACKEND_NAME = "c"
elif _FORCED in ("", "auto"):
    try:
        from . import _kernel as _backend  # type: ignore[no-redef]

        _BACKEND_NAME = "c"
    except ImportError:
        from . import _kernel_py as _backend  # type: ignore[no-redef]

        _BACKEND_NAME = "py"
else:
    raise RuntimeError(f"MINDIST_KERNEL must be 'py', 'c', or 'auto', got {_FORCED!r}")


def kernel_backend() -> str:
    """Name of the active kernel backend: 'c' or 'py'."""
    return _BACKEND_NAME


def kernel_module(name: str):
    """Fetch a kernel module by name, independent of the active backend."""
    if name == "py":
        from . import _kernel_py

        return _kernel_py
    if name == "c":
        from . import _kernel

        return _kernel
    raise ValueError(f"unknown kernel {name!r}")


@dataclass(eq=False)
class SingleSource:
    """One Dijkstra run. direction='out' holds d(source, v); 'in' holds
    d(v, source). parent[v] is v's neighbor one step closer to the source
    on a shortest path (-1 at the source and at unreached vertices)."""

    source: int
    direction: str
    dist: np.ndarray
    parent: np.ndarray

    def distance(self, v: int) -> int:
        return int(self.dist[v])


def dijkstra(
    g: Graph,
    source: int,
    direction: str = "out",
    weight_cap: int = INF,
    counters: WorkCounters | None = None,
) -> SingleSource:
    """Single-source shortest paths, ignoring arcs heavier than weight_cap."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range [0, {g.n})")
    if direction == "out":
        arrays = (g.indptr, g.dst, g.wt)
    elif direction == "in":
        arrays = (g.rindptr, g.rdst, g.rwt)
    else:
        raise ValueError(f"direction must be 'out' or 'in', got {direction!r}")
    cap = min(max(int(weight_cap), 0), INF)
    dist, parent, pops, scans = _backend.dijkstra_csr(*arrays, g.n, source, cap)
    if counters is not None:
        counters.record_run(pops, scans)
    return SingleSource(source, direction, dist, parent)


def extract_path(search: SingleSource, target: int) -> tuple[list[int], list[int]]:
    """Tree path of a search as (vertices, arc weights).

    For an 'out' search the vertices run source -> target; for an 'in'
    search they run target -> source. Arc weights are recovered from
    distance differences along the tree, so they sum to the distance.
    """
    if int(search.dist[target]) >= INF:
        raise ValueError(f"vertex {target} not reached from {search.source}")
    chain = [target]
    v = target
    while v != search.source:
        v = int(search.parent[v])
        chain.append(v)
    if search.direction == "out":
        chain.reverse()
    weights = [
        int(search.dist[chain[i + 1]]) - int(search.dist[chain[i]])
        if search.direction == "out"
        else int(search.dist[chain[i]]) - int(search.dist[chain[i + 1]])
        for i in range(len(chain) - 1)
    ]
    return chain, weights


@dataclass(eq=False)
class DistanceField:
    """Distances from and to one vertex, enough to evaluate two-way
    distances min(d(source, v), d(v, source)) against every vertex."""

    source: int
    out: SingleSource
    inc: SingleSource

    def distance_from(self, v: int) -> int:
        return int(self.out.dist[v])

    def distance_to(self, v: int) -> int:
        return int(self.inc.dist[v])

    def min_distance(self, v: int) -> int:
        return min(self.distance_from(v), self.distance_to(v))

    def min_distance_array(self) -> np.ndarray:
        return np.minimum(self.out.dist, self.inc.dist)

    def farthest(self) -> tuple[int, int]:
        """(vertex, distance) maximizing the two-way distance from the
        source, lowest id on ties; (source, 0) on a single-vertex graph."""
        md = self.min_distance_array()
        n = md.shape[0]
        if n == 1:
            return self.source, 0
        ids = np.arange(n)
        mask = ids != self.source
        sub = md[mask]
        pos = int(np.argmax(sub))
        return int(ids[mask][pos]), int(sub[pos])

    def eccentricity(self) -> int:
        """max over u != source of the two-way distance (0 when n == 1)."""
        return self.farthest()[1]


def distance_field(
    g: Graph,
    source: int,
    weight_cap: int = INF,
    counters: WorkCounters | None = None,
) -> DistanceField:
    out = dijkstra(g, source, "out", weight_cap, counters)
    inc = dijkstra(g, source, "in", weight_cap, counters)
    return DistanceField(source, out, inc)


def min_distance(
    g: Graph, u: int, v: int, counters: WorkCounters | None = None
) -> int:
    """min(d(u, v), d(v, u)) via two searches at u."""
    fwd = dijkstra(g, u, "out", INF, counters)
    bwd = dijkstra(g, u, "in", INF, counters)
    return min(int(fwd.dist[v]), int(bwd.dist[v]))


@dataclass(eq=False)
class ExactParameters:
    """Exact two-way eccentricities and the derived extremes."""

    eccentricities: list[int]
    diameter: int
    radius: int
    center: int
    diameter_pair: tuple[int, int]

    def as_dict(self) -> dict:
        return {
            "eccentricities": list(self.eccentricities),
            "diameter": self.diameter,
            "radius": self.radius,
            "center": self.center,
            "diameter_pair": list(self.diameter_pair),
        }


def _worker_count(max_workers: int | None) -> int:
    if max_workers is not None:
        return max(1, int(max_workers))
    env = os.environ.get("MINDIST_THREADS", "").strip()
    if not env:
        return 1
    k = int(env)
    if k == 0:
        return os.cpu_count() or 1
    return max(1, k)


def exact_parameters(
    g: Graph,
    counters: WorkCounters | None = None,
    max_workers: int | None = None,
) -> ExactParameters:
    """Exact eccentricities via one distance field (two searches) per vertex.

    Memory stays O(n) per worker; no n x n matrix is formed. MINDIST_THREADS
    (or max_workers) fans the per-source searches out over a thread pool; the
    reductions are order-independent, so results do not depend on thread
    count.
    """
    n = g.n
    ecc = [0] * n
    far = [0] * n

    def one(source: int) -> None:
        field = distance_field(g, source, INF, counters)
        far[source], ecc[source] = field.farthest()

    workers = _worker_count(max_workers)
    if workers <= 1 or n <= 1:
        for v in range(n):
            one(v)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(one, range(n)))
    diameter = max(ecc)
    radius = min(ecc)
    center = ecc.index(radius)
    v_star = ecc.index(diameter)
    pair = tuple(sorted((far[v_star], v_star))) if n > 1 else (0, 0)
    return ExactParameters(ecc, diameter, radius, center, pair)


def finite_min_ecc_mask(g: Graph) -> np.ndarray:
    """Boolean mask: True where the two-way eccentricity is finite.

    A vertex has finite eccentricity iff its strongly connected component
    either reaches or is reached by every component. Computed on the
    condensation with bitset reachability closures.
    """
    comp_of, comps, dag = condensation(g)
    k = len(comps)
    full = (1 << k) - 1
    down = [0] * k
    for i in range(k):
        bits = 1 << i
        for j in dag[i]:
            bits |= down[j]
        down[i] = bits
    up = [1 << i for i in range(k)]
    for i in range(k - 1, -1, -1):
        for j in dag[i]:
            up[j] |= up[i]
    comparable = np.array(
        [(down[c] | up[c]) == full for c in range(k)], dtype=bool
    )
    return comparable[comp_of]
