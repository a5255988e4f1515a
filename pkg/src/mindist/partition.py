"""Randomized balanced partition of a digraph by two-way distance sides.

Every vertex v splits the others into a near side S (vertices u with
d(u, v) < d(v, u), ties by smaller id) and a far side T. More than half of
any vertex set contains splitters whose two sides are balanced within a
factor of 8, so sampling a few candidates finds one quickly; repeatedly
splitting the largest part with a sampled splitter, then refining by the
full side pattern, yields parts that are pairwise separated (some splitter
sees any two parts on opposite sides) and side-homogeneous.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .counters import WorkCounters
from .graph import Graph
from .shortest_paths import DistanceField, distance_field

DEFAULT_SEED = 1729


def resolve_rng(seed_or_rng: int | random.Random) -> tuple[random.Random, int]:
    """Normalize a seed-or-generator argument to (generator, effective seed).

    The effective seed fully determines the generator, so reports that
    record it can be replayed exactly.
    """
    if isinstance(seed_or_rng, random.Random):
        seed = seed_or_rng.getrandbits(63)
    elif isinstance(seed_or_rng, int) and not isinstance(seed_or_rng, bool):
        seed = seed_or_rng
    else:
        raise ValueError("expected an int seed or a random.Random instance")
    return random.Random(seed), seed


def classify_sides(field: DistanceField) -> np.ndarray:
    """Side of every vertex u relative to the field's source v.

    +1 when u is on the near side S (d(u, v) < d(v, u), ties by id),
    -1 on the far side T, 0 at v itself. Two INF distances count as a tie.
    """
    v = field.source
    to_v = field.inc.dist
    from_v = field.out.dist
    n = to_v.shape[0]
    side = np.where(to_v < from_v, 1, -1).astype(np.int8)
    ties = to_v == from_v
    ids = np.arange(n)
    side[ties] = np.where(ids[ties] < v, 1, -1)
    side[v] = 0
    return side


def splitter_balance(side: np.ndarray, members: np.ndarray) -> tuple[int, int]:
    """(|S|, |T|) restricted to `members` (the splitter itself excluded)."""
    vals = side[members]
    return int((vals == 1).sum()), int((vals == -1).sum())


def _accepts(side: np.ndarray, members: np.ndarray) -> bool:
    # Balanced within a factor of 8 up to rounding: both sides hold at
    # least floor((|U| - 1) / 9) of the other members of U.
    s, t = splitter_balance(side, members)
    need = (members.shape[0] - 1) // 9
    return min(s, t) >= need


@dataclass(eq=False)
class Partition:
    """Result of the randomized split process on `graph`.

    `splitters` lists the chosen splitters in split order; `parts` holds the
    final side-pattern classes of the remaining vertices (each sorted,
    ordered by smallest member), refining the split-history `coarse_parts`.
    `sides[w]` and `fields[w]` keep each splitter's side array and distance
    field for reuse by the estimators.
    """

    graph: Graph
    q: int
    splitters: list[int]
    parts: list[list[int]]
    coarse_parts: list[list[int]]
    part_of: np.ndarray
    sides: dict[int, np.ndarray]
    fields: dict[int, DistanceField]
    fallback_scans: int

    def side_of(self, w: int, u: int) -> int:
        return int(self.sides[w][u])

    def pattern(self, u: int) -> tuple[int, ...]:
        return tuple(int(self.sides[w][u]) for w in self.splitters)


def balanced_partition(
    g: Graph,
    q: int,
    rng: random.Random,
    counters: WorkCounters | None = None,
) -> Partition:
    """Split the vertex set q times (capped at n - 1), largest part first.

    Each split samples candidate splitters from the part until one passes
    the balance test; batches are sized so failure is vanishingly rare, and
    a deterministic ascending scan (always successful, since more than half
    of the part qualifies) backs the sampling up. Parts are then refined
    into full side-pattern classes.
    """
    n = g.n
    if q < 0:
        raise ValueError("split count must be >= 0")
    rounds = min(q, n - 1)
    level = max(1, math.ceil(math.log2(n))) if n > 1 else 1
    batch_size = level * level
    max_batches = level
    splitters: list[int] = []
    sides: dict[int, np.ndarray] = {}
    fields: dict[int, DistanceField] = {}
    parts: list[list[int]] = [list(range(n))]
    fallback_scans = 0

    def field_for(w: int) -> DistanceField:
        if w not in fields:
            fields[w] = distance_field(g, w, counters=counters)
            sides[w] = classify_sides(fields[w])
        return fields[w]

    for _ in range(rounds):
        largest = max(
            range(len(parts)), key=lambda i: (len(parts[i]), -parts[i][0])
        )
        members = parts.pop(largest)
        u_arr = np.array(members, dtype=np.int64)
        chosen = -1
        for _ in range(max_batches):
            batch = [rng.randrange(len(members)) for _ in range(batch_size)]
            for idx in batch:
                w = members[idx]
                field_for(w)
                if _accepts(sides[w], u_arr):
                    chosen = w
                    break
            if chosen != -1:
                break
        if chosen == -1:
            fallback_scans += 1
            for w in members:
                field_for(w)
                if _accepts(sides[w], u_arr):
                    chosen = w
                    break
        assert chosen != -1, "balance test admits more than half of any part"
        splitters.append(chosen)
        side = sides[chosen]
        rest = u_arr[u_arr != chosen]
        vals = side[rest]
        near = rest[vals == 1].tolist()
        far = rest[vals == -1].tolist()
        if near:
            parts.append(near)
        if far:
            parts.append(far)

    coarse_parts = sorted((sorted(p) for p in parts), key=lambda p: p[0])
    atoms: dict[tuple[int, ...], list[int]] = {}
    in_w = set(splitters)
    for u in range(n):
        if u in in_w:
            continue
        key = tuple(int(sides[w][u]) for w in splitters)
        atoms.setdefault(key, []).append(u)
    final_parts = sorted(atoms.values(), key=lambda p: p[0])
    part_of = np.full(n, -1, dtype=np.int64)
    for i, part in enumerate(final_parts):
        for u in part:
            part_of[u] = i
    # Keep only the splitters' side arrays and fields; rejected candidates
    # were evaluated (and counted) but are not part of the result.
    sides = {w: sides[w] for w in splitters}
    fields = {w: fields[w] for w in splitters}
    return Partition(
        graph=g,
        q=q,
        splitters=splitters,
        parts=final_parts,
        coarse_parts=coarse_parts,
        part_of=part_of,
        sides=sides,
        fields=fields,
        fallback_scans=fallback_scans,
    )
