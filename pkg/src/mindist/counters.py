"""Work counters shared by every search in the package.

Every Dijkstra run reports how many heap pops settled a vertex and how many
arcs it scanned; callers thread one WorkCounters through a whole computation
to compare the work of different estimators on equal terms.
"""

from __future__ import annotations

import threading


class WorkCounters:
    __slots__ = ("dijkstra_runs", "heap_pops", "edge_scans", "_lock")

    def __init__(self) -> None:
        self.dijkstra_runs = 0
        self.heap_pops = 0
        self.edge_scans = 0
        self._lock = threading.Lock()

    def record_run(self, pops: int, scans: int) -> None:
        with self._lock:
            self.dijkstra_runs += 1
            self.heap_pops += int(pops)
            self.edge_scans += int(scans)

    def merge(self, other: "WorkCounters") -> None:
        with self._lock:
            self.dijkstra_runs += other.dijkstra_runs
            self.heap_pops += other.heap_pops
            self.edge_scans += other.edge_scans

    def as_dict(self) -> dict[str, int]:
        return {
            "dijkstra_runs": self.dijkstra_runs,
            "heap_pops": self.heap_pops,
            "edge_scans": self.edge_scans,
        }

    def __repr__(self) -> str:
        return (
            f"WorkCounters(runs={self.dijkstra_runs}, "
            f"pops={self.heap_pops}, scans={self.edge_scans})"
        )
