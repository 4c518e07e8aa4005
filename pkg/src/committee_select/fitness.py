"""Committee representation and the group-independence fitness.

A committee of k members scores

    f = (mean pairwise geodesic distance + minimum pairwise distance)
        / (2 * graph diameter)

over the k*(k-1)/2 unordered member pairs, so f is in (0, 1] and
f = 1 exactly when every pair sits at diameter distance.
"""

from dataclasses import dataclass

import numpy as np

from committee_select import kernels
from committee_select.graph import UnreachablePairError, pairwise_distances


@dataclass(frozen=True, order=True)
class Committee:
    """Sorted tuple of k >= 2 distinct node ids."""

    members: tuple

    def __post_init__(self):
        members = self.members
        if not (isinstance(members, tuple) and all(type(m) is int for m in members)):
            members = tuple(int(m) for m in members)
        if len(members) < 2:
            raise ValueError(f"committee needs at least 2 members, got {len(members)}")
        if any(a >= b for a, b in zip(members, members[1:])):
            ordered = tuple(sorted(members))
            if any(a == b for a, b in zip(ordered, ordered[1:])):
                raise ValueError(f"duplicate members in committee: {members}")
            members = ordered
        object.__setattr__(self, "members", members)

    @property
    def k(self):
        return len(self.members)

    def replace(self, out_member, in_member):
        """New committee with one member swapped."""
        members = [m for m in self.members if m != out_member] + [int(in_member)]
        return Committee(tuple(members))


@dataclass(frozen=True)
class FitnessValue:
    """Fitness plus its breakdown; higher means more independent."""

    value: float
    mean_pair_distance: float
    min_pair_distance: int

    def as_dict(self):
        return {
            "value": self.value,
            "mean_pair_distance": self.mean_pair_distance,
            "min_pair_distance": self.min_pair_distance,
        }


def _fitness_from_pairs(pair_distances, diameter):
    if diameter <= 0:
        raise ValueError("diameter must be positive")
    mean = sum(pair_distances) / len(pair_distances)
    lowest = min(pair_distances)
    return FitnessValue(
        value=(mean + lowest) / (2.0 * diameter),
        mean_pair_distance=mean,
        min_pair_distance=int(lowest),
    )


def fitness(g, diameter, committee):
    """Evaluate one committee on g; all member pairs must be connected."""
    for m in committee.members:
        if not 0 <= m < g.node_count:
            raise ValueError(f"member {m} out of range [0, {g.node_count})")
    mat = pairwise_distances(g, committee.members)
    k = committee.k
    pairs = [int(mat[i, j]) for i in range(k) for j in range(i + 1, k)]
    return _fitness_from_pairs(pairs, diameter)


def random_committee(g, k, rng):
    """Uniformly sampled committee of k distinct nodes."""
    if not 2 <= k <= g.node_count:
        raise ValueError(f"k must be in [2, {g.node_count}], got {k}")
    members = rng.choice(g.node_count, size=k, replace=False)
    return Committee(tuple(int(m) for m in members))


class FitnessEvaluator:
    """Fitness with per-source BFS rows cached across evaluations.

    Solvers evaluate thousands of overlapping committees; caching the
    distance rows turns each evaluation into O(k^2) lookups after the
    first BFS per member. Every evaluate() call counts as exactly one
    fitness evaluation regardless of cache hits.
    """

    def __init__(self, g, diameter):
        self.graph = g
        self.diameter = diameter
        self.evaluations = 0
        self._rows = {}

    def _row(self, u):
        row = self._rows.get(u)
        if row is None:
            row = kernels.bfs_row(self.graph.indptr, self.graph.indices, u)
            self._rows[u] = row
        return row

    def evaluate(self, committee):
        self.evaluations += 1
        members = committee.members
        pairs = []
        for i, u in enumerate(members[:-1]):
            row = self._row(u)
            for v in members[i + 1:]:
                d = int(row[v])
                if d < 0:
                    raise UnreachablePairError(u, v)
                pairs.append(d)
        return _fitness_from_pairs(pairs, self.diameter)

    def evaluate_bits(self, position):
        """Evaluate a binary membership vector (must hold >= 2 ones)."""
        members = np.flatnonzero(position)
        return self.evaluate(Committee(tuple(int(m) for m in members)))
