"""Immutable directed graphs with integer weights, stored in CSR form.

Vertices are 0..n-1. Parallel edges collapse to their minimum weight and
self-loops are dropped, so every graph has exactly one canonical edge list
and the text round-trip (save -> load) is the identity on canonical graphs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

INF = 2**64 - 1
MAX_WEIGHT = 2**40
MAX_VERTICES = 2**20


def sat_add(a: int, b: int) -> int:
    """Add two distances, saturating at INF."""
    if a >= INF or b >= INF:
        return INF
    total = a + b
    return total if total < INF else INF


class Graph:
    """Directed graph over vertices 0..n-1 with integer edge weights.

    Input arcs (text format, generators) must have weight >= 1; graphs built
    programmatically may carry weight-0 arcs (augmented graphs built by the
    estimators do). Forward and reverse CSR adjacency are both kept so both
    out- and in-searches run over sorted, cache-friendly arrays.
    """

    __slots__ = ("n", "indptr", "dst", "wt", "rindptr", "rdst", "rwt")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError("vertex count must be an int")
        if n < 1 or n > MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}]")
        self.n = n
        best: dict[tuple[int, int], int] = {}
        heaviest = 0
        for u, v, w in edges:
            self._check_vertex(n, u)
            self._check_vertex(n, v)
            if not isinstance(w, int) or isinstance(w, bool):
                raise ValueError(f"edge weight must be an int, got {w!r}")
            if w < 0:
                raise ValueError(f"edge weight must be >= 0, got {w}")
            if u == v:
                continue
            if w > heaviest:
                heaviest = w
            key = (u, v)
            prev = best.get(key)
            if prev is None or w < prev:
                best[key] = w
        # Any simple path then sums below 2^63, so uint64 distance
        # arithmetic cannot overflow or collide with the INF sentinel.
        if (n - 1) * heaviest >= 2**63:
            raise ValueError("edge weight too large for this vertex count")
        items = sorted(best.items())
        m = len(items)
        src = np.fromiter((uv[0] for uv, _ in items), dtype=np.int64, count=m)
        self.dst = np.fromiter((uv[1] for uv, _ in items), dtype=np.int64, count=m)
        self.wt = np.fromiter((w for _, w in items), dtype=np.uint64, count=m)
        self.indptr = _row_pointers(src, n)
        order = np.lexsort((src, self.dst))
        self.rdst = src[order].copy()
        self.rwt = self.wt[order].copy()
        self.rindptr = _row_pointers(self.dst[order], n)
        for arr in (self.indptr, self.dst, self.wt, self.rindptr, self.rdst, self.rwt):
            arr.flags.writeable = False

    @staticmethod
    def _check_vertex(n: int, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"vertex id must be an int, got {v!r}")
        if v < 0 or v >= n:
            raise ValueError(f"vertex id {v} out of range [0, {n})")

    @property
    def m(self) -> int:
        return int(self.dst.shape[0])

    def edges(self) -> list[tuple[int, int, int]]:
        """Canonical edge list, sorted by (source, destination)."""
        out = []
        indptr = self.indptr
        for u in range(self.n):
            for i in range(int(indptr[u]), int(indptr[u + 1])):
                out.append((u, int(self.dst[i]), int(self.wt[i])))
        return out

    def out_neighbors(self, u: int) -> tuple[np.ndarray, np.ndarray]:
        lo, hi = int(self.indptr[u]), int(self.indptr[u + 1])
        return self.dst[lo:hi], self.wt[lo:hi]

    def in_neighbors(self, v: int) -> tuple[np.ndarray, np.ndarray]:
        lo, hi = int(self.rindptr[v]), int(self.rindptr[v + 1])
        return self.rdst[lo:hi], self.rwt[lo:hi]

    def edge_weight(self, u: int, v: int) -> int | None:
        """Weight of arc (u, v), or None if absent."""
        lo, hi = int(self.indptr[u]), int(self.indptr[u + 1])
        row = self.dst[lo:hi]
        i = int(np.searchsorted(row, v))
        if i < row.shape[0] and int(row[i]) == v:
            return int(self.wt[lo + i])
        return None

    @property
    def min_weight(self) -> int | None:
        return int(self.wt.min()) if self.m else None

    @property
    def max_weight(self) -> int | None:
        return int(self.wt.max()) if self.m else None

    @property
    def is_unit_weight(self) -> bool:
        return self.m > 0 and bool((self.wt == 1).all())

    def pruned(self, weight_cap: int) -> "Graph":
        """Subgraph keeping only arcs of weight <= weight_cap."""
        keep = self.wt <= np.uint64(max(weight_cap, 0))
        src = _csr_sources(self.indptr)
        edges = zip(src[keep].tolist(), self.dst[keep].tolist(), self.wt[keep].tolist())
        return Graph(self.n, [(u, v, int(w)) for u, v, w in edges])

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced on `vertices`, relabeled 0..k-1 in ascending id order.

        Returns the subgraph and the sorted original ids (new id -> old id).
        """
        keep = sorted(set(vertices))
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        remap = {old: new for new, old in enumerate(keep)}
        edges = []
        for old_u in keep:
            lo, hi = int(self.indptr[old_u]), int(self.indptr[old_u + 1])
            for i in range(lo, hi):
                old_v = int(self.dst[i])
                new_v = remap.get(old_v)
                if new_v is not None:
                    edges.append((remap[old_u], new_v, int(self.wt[i])))
        return Graph(len(keep), edges), keep

    def adjacency(self) -> list[list[int]]:
        """Forward adjacency as plain lists (for structure-only traversals)."""
        return [
            self.dst[int(self.indptr[u]) : int(self.indptr[u + 1])].tolist()
            for u in range(self.n)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and bool(np.array_equal(self.indptr, other.indptr))
            and bool(np.array_equal(self.dst, other.dst))
            and bool(np.array_equal(self.wt, other.wt))
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # Text format: the shortest-path arc format ("p sp N M" header, then one
    # "a U V W" line per arc, vertices 1-indexed). Comment lines start with c.

    def dumps(self) -> str:
        lines = [f"p sp {self.n} {self.m}"]
        indptr = self.indptr
        for u in range(self.n):
            for i in range(int(indptr[u]), int(indptr[u + 1])):
                lines.append(f"a {u + 1} {int(self.dst[i]) + 1} {int(self.wt[i])}")
        return "\n".join(lines) + "\n"

    def save(self, path: str) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.dumps())

    @classmethod
    def loads(cls, text: str) -> "Graph":
        n = None
        m_declared = None
        edges: list[tuple[int, int, int]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            fields = line.split()
            if fields[0] == "p":
                if n is not None:
                    raise ValueError(f"line {lineno}: duplicate problem line")
                if len(fields) != 4 or fields[1] != "sp":
                    raise ValueError(f"line {lineno}: expected 'p sp N M'")
                n, m_declared = _parse_int(fields[2], lineno), _parse_int(fields[3], lineno)
            elif fields[0] == "a":
                if n is None:
                    raise ValueError(f"line {lineno}: arc before problem line")
                if len(fields) != 4:
                    raise ValueError(f"line {lineno}: expected 'a U V W'")
                u = _parse_int(fields[1], lineno) - 1
                v = _parse_int(fields[2], lineno) - 1
                w = _parse_int(fields[3], lineno)
                if not 1 <= w <= MAX_WEIGHT:
                    raise ValueError(
                        f"line {lineno}: arc weight must be in [1, {MAX_WEIGHT}], got {w}"
                    )
                edges.append((u, v, w))
            else:
                raise ValueError(f"line {lineno}: unknown line type {fields[0]!r}")
        if n is None:
            raise ValueError("missing problem line 'p sp N M'")
        if len(edges) != m_declared:
            raise ValueError(f"problem line declares {m_declared} arcs, found {len(edges)}")
        return cls(n, edges)

    @classmethod
    def load(cls, path: str) -> "Graph":
        with open(path, "r", encoding="ascii") as fh:
            return cls.loads(fh.read())


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ValueError(f"line {lineno}: expected an integer, got {token!r}") from None


def _row_pointers(sorted_rows: np.ndarray, n: int) -> np.ndarray:
    counts = np.bincount(sorted_rows, minlength=n) if sorted_rows.size else np.zeros(n, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr


def _csr_sources(indptr: np.ndarray) -> np.ndarray:
    n = indptr.shape[0] - 1
    return np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))


def tarjan_scc(n: int, adjacency: Sequence[Sequence[int]]) -> list[list[int]]:
    """Strongly connected components of a digraph given as adjacency lists.

    Components come out in reverse topological order (every arc between
    components points from a later component to an earlier one); each
    component is sorted ascending.
    """
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            frame = work[-1]
            v, ei = frame
            if ei == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            nbrs = adjacency[v]
            while ei < len(nbrs):
                w = nbrs[ei]
                ei += 1
                if index[w] == -1:
                    frame[1] = ei
                    work.append([w, 0])
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                comps.append(comp)
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
    return comps


def condensation(g: Graph) -> tuple[np.ndarray, list[list[int]], list[set[int]]]:
    """SCC condensation of g.

    Returns (component id per vertex, components in reverse topological
    order, DAG adjacency between component ids).
    """
    comps = tarjan_scc(g.n, g.adjacency())
    comp_of = np.empty(g.n, dtype=np.int64)
    for cid, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = cid
    dag: list[set[int]] = [set() for _ in comps]
    src = _csr_sources(g.indptr)
    for i in range(g.m):
        cu = int(comp_of[int(src[i])])
        cv = int(comp_of[int(g.dst[i])])
        if cu != cv:
            dag[cu].add(cv)
    return comp_of, comps, dag
