# Compiled Dijkstra kernel over CSR arrays.
#
# Behavior-identical to _kernel_py.dijkstra_csr: same heap order (distance,
# then vertex id), same strict-improvement relaxation, same counters.

import numpy as np

ctypedef unsigned long long u64
ctypedef long long i64

cdef u64 INF_U64 = 18446744073709551615ULL


cdef inline bint _less(u64 d1, i64 v1, u64 d2, i64 v2) nogil:
    return d1 < d2 or (d1 == d2 and v1 < v2)


cdef inline void _heap_push(u64[::1] hd, i64[::1] hv, Py_ssize_t* size, u64 d, i64 v) nogil:
    cdef Py_ssize_t i = size[0]
    cdef Py_ssize_t p
    hd[i] = d
    hv[i] = v
    size[0] = i + 1
    while i > 0:
        p = (i - 1) >> 1
        if _less(hd[i], hv[i], hd[p], hv[p]):
            hd[i], hd[p] = hd[p], hd[i]
            hv[i], hv[p] = hv[p], hv[i]
            i = p
        else:
            break


cdef inline void _heap_pop(u64[::1] hd, i64[::1] hv, Py_ssize_t* size) nogil:
    cdef Py_ssize_t last = size[0] - 1
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t left, right, best
    hd[0] = hd[last]
    hv[0] = hv[last]
    size[0] = last
    while True:
        left = 2 * i + 1
        if left >= last:
            break
        right = left + 1
        best = left
        if right < last and _less(hd[right], hv[right], hd[left], hv[left]):
            best = right
        if _less(hd[best], hv[best], hd[i], hv[i]):
            hd[i], hd[best] = hd[best], hd[i]
            hv[i], hv[best] = hv[best], hv[i]
            i = best
        else:
            break


def dijkstra_csr(const i64[::1] indptr, const i64[::1] dst, const u64[::1] wt, int n, int source, object weight_cap):
    """Single-source shortest paths over a CSR adjacency.

    Arcs with weight > weight_cap are ignored. Returns (dist, parent, pops,
    scans): dist is uint64 with INF for unreached vertices, parent is int64
    with -1 for the source and unreached vertices, pops counts settled heap
    pops and scans counts arcs examined from settled vertices.
    """
    cdef u64 wcap = <u64> weight_cap
    cdef Py_ssize_t m = dst.shape[0]
    dist_arr = np.full(n, INF_U64, dtype=np.uint64)
    parent_arr = np.full(n, -1, dtype=np.int64)
    done_arr = np.zeros(n, dtype=np.uint8)
    heap_d_arr = np.empty(m + 2, dtype=np.uint64)
    heap_v_arr = np.empty(m + 2, dtype=np.int64)
    cdef u64[::1] dist = dist_arr
    cdef i64[::1] parent = parent_arr
    cdef unsigned char[::1] done = done_arr
    cdef u64[::1] hd = heap_d_arr
    cdef i64[::1] hv = heap_v_arr
    cdef Py_ssize_t size = 0
    cdef long long pops = 0
    cdef long long scans = 0
    cdef u64 d, w, nd
    cdef i64 u, v
    cdef Py_ssize_t i, lo, hi
    with nogil:
        dist[source] = 0
        _heap_push(hd, hv, &size, 0, source)
        while size > 0:
            d = hd[0]
            u = hv[0]
            _heap_pop(hd, hv, &size)
            if done[u]:
                continue
            done[u] = 1
            pops += 1
            lo = indptr[u]
            hi = indptr[u + 1]
            for i in range(lo, hi):
                w = wt[i]
                if w > wcap:
                    continue
                scans += 1
                v = dst[i]
                nd = d + w
                if nd < dist[v]:
                    dist[v] = nd
                    parent[v] = u
                    _heap_push(hd, hv, &size, nd, v)
    return dist_arr, parent_arr, pops, scans
