"""Pure-Python Dijkstra kernel over CSR arrays.

Behavior-identical to the compiled kernel in _kernel.pyx: same heap order
(distance, then vertex id), same strict-improvement relaxation, same
counters. Tests assert exact output parity between the two backends.
"""

from __future__ import annotations

import heapq

import numpy as np

INF = 2**64 - 1


def dijkstra_csr(indptr, dst, wt, n, source, weight_cap):
    """Single-source shortest paths over a CSR adjacency.

    Arcs with weight > weight_cap are ignored. Returns (dist, parent, pops,
    scans): dist is uint64 with INF for unreached vertices, parent is int64
    with -1 for the source and unreached vertices, pops counts settled heap
    pops and scans counts arcs examined from settled vertices.
    """
    iptr = indptr.tolist()
    heads = dst.tolist()
    weights = wt.tolist()
    dist = [INF] * n
    parent = [-1] * n
    done = [False] * n
    dist[source] = 0
    heap = [(0, source)]
    pops = 0
    scans = 0
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        pops += 1
        for i in range(iptr[u], iptr[u + 1]):
            w = weights[i]
            if w > weight_cap:
                continue
            scans += 1
            v = heads[i]
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    return (
        np.array(dist, dtype=np.uint64),
        np.array(parent, dtype=np.int64),
        pops,
        scans,
    )
