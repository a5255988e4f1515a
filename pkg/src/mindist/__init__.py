"""Exact and approximate min-distance diameter, radius, and eccentricities
of directed weighted graphs, where the distance between u and v is the
smaller of the two one-way shortest-path distances."""

from .counters import WorkCounters
from .graph import INF, Graph
from .shortest_paths import (
    DistanceField,
    ExactParameters,
    SingleSource,
    dijkstra,
    distance_field,
    exact_parameters,
    finite_min_ecc_mask,
    kernel_backend,
    min_distance,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Graph",
    "WorkCounters",
    "SingleSource",
    "DistanceField",
    "ExactParameters",
    "dijkstra",
    "distance_field",
    "min_distance",
    "exact_parameters",
    "finite_min_ecc_mask",
    "kernel_backend",
    "__version__",
]
