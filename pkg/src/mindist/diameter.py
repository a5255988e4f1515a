"""Approximation of the largest two-way distance in a digraph.

One round partitions the graph around ~n^(1/(levels+1)) splitters, takes
D' = the largest splitter eccentricity, and then looks inside each part:
either brute force over in-part pairs on two hub-augmented copies of the
part (base level), or recursion on a combined hub-augmented part. Hub arcs
price detours through the splitters to within an additive D' each way, so
in-part distances survive up to -2D' per hub (-4D' combined) while never
growing; pairs split across parts are covered by D' itself, which is at
least half the true value in that case. The estimate always lands in
[D / (4*levels - 1), D], and it is infinite exactly when D is.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .counters import WorkCounters
from .graph import INF, Graph
from .partition import DEFAULT_SEED, Partition, balanced_partition, resolve_rng
from .shortest_paths import dijkstra, distance_field

_MIX_MULT = 0x9E3779B97F4A7C15
_MIX_ADD = 0x243F6A8885A308D3


def _child_seed(seed: int, index: int) -> int:
    """Seed for the recursive call on part `index`, derived so replaying a
    report reproduces every level's partition."""
    return (seed * _MIX_MULT + _MIX_ADD * (index + 1)) % 2**63


def _ceil_root(n: int, k: int) -> int:
    """Smallest q >= 1 with q**k >= n."""
    q = max(1, round(n ** (1.0 / k)))
    while q**k < n:
        q += 1
    while q > 1 and (q - 1) ** k >= n:
        q -= 1
    return q


@dataclass(eq=False)
class AugmentedPart:
    """One part of a partition with hub vertices appended after the members.

    The near hub prices routes entering the part from splitters that see
    every member on their near side; the far hub prices routes leaving the
    part toward splitters that see every member on their far side. Member j
    of `graph` is original vertex `members[j]`.
    """

    graph: Graph
    members: list[int]
    hub_near: int | None
    hub_far: int | None


def build_augmented_part(
    g: Graph,
    partition: Partition,
    index: int,
    d_prime: int,
    kind: str,
) -> AugmentedPart:
    """Augment part `index` with hubs: 'near', 'far', or 'combined'.

    Near hub h: arc v -> h of weight 0 for every member v, and arc h -> v
    of weight max(min over near splitters w of d(w, v) - d_prime, 0)
    whenever that minimum is finite. The far hub mirrors this with
    d(v, w). Arcs with an infinite underlying distance are omitted.
    """
    if kind not in ("near", "far", "combined"):
        raise ValueError(f"unknown augmentation kind {kind!r}")
    members = partition.parts[index]
    sub, ids = g.induced(members)
    k = len(members)
    rep = members[0]
    edges = sub.edges()
    hub_near = k if kind in ("near", "combined") else None
    hub_far = (k + 1 if kind == "combined" else k) if kind in ("far", "combined") else None
    if hub_near is not None:
        near = [w for w in partition.splitters if partition.sides[w][rep] == 1]
        for j, v in enumerate(members):
            edges.append((j, hub_near, 0))
            reach = min(
                (int(partition.fields[w].out.dist[v]) for w in near),
                default=INF,
            )
            if reach < INF:
                edges.append((hub_near, j, max(reach - d_prime, 0)))
    if hub_far is not None:
        far = [w for w in partition.splitters if partition.sides[w][rep] == -1]
        for j, v in enumerate(members):
            edges.append((hub_far, j, 0))
            reach = min(
                (int(partition.fields[w].inc.dist[v]) for w in far),
                default=INF,
            )
            if reach < INF:
                edges.append((j, hub_far, max(reach - d_prime, 0)))
    count = k + (2 if kind == "combined" else 1)
    return AugmentedPart(Graph(count, edges), members, hub_near, hub_far)


def _pairs_estimate(
    g: Graph,
    partition: Partition,
    index: int,
    d_prime: int,
    counters: WorkCounters | None,
) -> tuple[int, tuple[int, int]] | None:
    """Largest two-way in-part distance across the two augmented copies."""
    members = partition.parts[index]
    k = len(members)
    if k < 2:
        return None
    near = build_augmented_part(g, partition, index, d_prime, "near")
    far = build_augmented_part(g, partition, index, d_prime, "far")
    dist_near = [dijkstra(near.graph, x, "out", INF, counters).dist for x in range(k)]
    dist_far = [dijkstra(far.graph, x, "out", INF, counters).dist for x in range(k)]
    best = -1
    pair = (members[0], members[1])
    for x in range(k):
        for y in range(x + 1, k):
            fwd = min(int(dist_near[x][y]), int(dist_far[x][y]))
            bwd = min(int(dist_near[y][x]), int(dist_far[y][x]))
            val = min(fwd, bwd)
            if val > best:
                best = val
                pair = (members[x], members[y])
    return best, pair


def _estimate(
    g: Graph, levels: int, seed: int, counters: WorkCounters | None
) -> tuple[int, dict, int]:
    n = g.n
    if n == 1:
        return 0, {"kind": "trivial"}, 0
    q = _ceil_root(n, levels + 1)
    partition = balanced_partition(g, q, random.Random(seed), counters)
    best = -1
    witness: dict = {}
    for w in partition.splitters:
        val = partition.fields[w].eccentricity()
        if val > best:
            best = val
            witness = {"kind": "center", "vertex": w}
    d_prime = best
    if d_prime >= INF:
        return INF, witness, INF
    for i, members in enumerate(partition.parts):
        if len(members) < 2:
            # A lone member sits at two-way distance 0 from both hubs, so
            # such a part can never raise the estimate.
            continue
        if levels == 1:
            got = _pairs_estimate(g, partition, i, d_prime, counters)
            if got is None:
                continue
            val, pair = got
            cand = {"kind": "pair", "part": i, "u": pair[0], "v": pair[1]}
        else:
            child = build_augmented_part(g, partition, i, d_prime, "combined")
            val, inner, _ = _estimate(
                child.graph, levels - 1, _child_seed(seed, i), counters
            )
            cand = {"kind": "recurse", "part": i, "inner": inner}
        if val > best:
            best = val
            witness = cand
    return best, witness, d_prime


@dataclass(eq=False)
class DiameterReport:
    """Estimate plus everything needed to replay it deterministically."""

    estimate: int
    levels: int
    factor: int
    seed: int
    d_prime: int
    witness: dict

    def as_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "levels": self.levels,
            "factor": self.factor,
            "seed": self.seed,
            "d_prime": self.d_prime,
            "witness": self.witness,
        }


def max_levels(n: int) -> int:
    return max(1, math.ceil(math.log2(n))) if n > 1 else 1


def approx_diameter(
    g: Graph,
    levels: int = 1,
    seed_or_rng: int | random.Random | None = None,
    counters: WorkCounters | None = None,
) -> DiameterReport:
    """Estimate the largest two-way distance within [D / (4L-1), D].

    L is `levels` clamped to ceil(log2 n); larger L trades accuracy for
    speed (roughly m * n^(1/(L+1)) work). The estimate is infinite exactly
    when some pair is mutually unreachable.
    """
    if levels < 1:
        raise ValueError("levels must be >= 1")
    _, seed = resolve_rng(DEFAULT_SEED if seed_or_rng is None else seed_or_rng)
    effective = min(levels, max_levels(g.n))
    estimate, witness, d_prime = _estimate(g, effective, seed, counters)
    return DiameterReport(
        estimate=estimate,
        levels=effective,
        factor=4 * effective - 1,
        seed=seed,
        d_prime=d_prime,
        witness=witness,
    )


def witness_value(
    g: Graph, report: DiameterReport, counters: WorkCounters | None = None
) -> int:
    """Recompute the report's estimate from its witness chain.

    Replays the partition at every level from the recorded seed, rebuilds
    the augmented parts along the chain, and evaluates the cited center or
    pair exactly; equality with report.estimate certifies the report.
    """
    return _witness_value(g, report.levels, report.seed, report.witness, counters)


def _witness_value(
    g: Graph,
    levels: int,
    seed: int,
    witness: dict,
    counters: WorkCounters | None,
) -> int:
    kind = witness["kind"]
    if kind == "trivial":
        return 0
    if kind == "center":
        return distance_field(g, witness["vertex"], counters=counters).eccentricity()
    q = _ceil_root(g.n, levels + 1)
    partition = balanced_partition(g, q, random.Random(seed), counters)
    d_prime = max(
        partition.fields[w].eccentricity() for w in partition.splitters
    )
    index = witness["part"]
    if kind == "pair":
        near = build_augmented_part(g, partition, index, d_prime, "near")
        far = build_augmented_part(g, partition, index, d_prime, "far")
        x = near.members.index(witness["u"])
        y = near.members.index(witness["v"])
        rows = {
            (which, s): dijkstra(ap.graph, s, "out", INF, counters).dist
            for which, ap in (("near", near), ("far", far))
            for s in (x, y)
        }
        fwd = min(int(rows[("near", x)][y]), int(rows[("far", x)][y]))
        bwd = min(int(rows[("near", y)][x]), int(rows[("far", y)][x]))
        return min(fwd, bwd)
    if kind == "recurse":
        child = build_augmented_part(g, partition, index, d_prime, "combined")
        return _witness_value(
            child.graph, levels - 1, _child_seed(seed, index), witness["inner"], counters
        )
    raise ValueError(f"unknown witness kind {kind!r}")
