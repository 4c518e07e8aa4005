"""Undirected social graph: loading, distances, and network metrics.

Graphs are immutable after construction and stored in CSR form
(int32 indptr/indices with sorted neighbor lists) so the hot BFS
kernels can run over raw arrays. Node ids are remapped to a dense
0-based range at load time; the original ids are kept for reporting.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from committee_select import kernels


class GraphLoadError(ValueError):
    """Unreadable, malformed, or empty edge-list input."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


class UnreachablePairError(ValueError):
    """A required node pair has no connecting path."""

    def __init__(self, u, v):
        super().__init__(f"no path between nodes {u} and {v}")
        self.pair = (u, v)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph over dense 0-based node ids."""

    node_count: int
    edge_count: int
    indptr: np.ndarray
    indices: np.ndarray
    original_ids: np.ndarray  # internal id -> id in the source file

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self.original_ids.setflags(write=False)

    @classmethod
    def from_edges(cls, edges, original_ids=None):
        """Build a graph from (u, v) pairs over ids 0..n-1.

        Self-loops are dropped and duplicate edges collapsed; isolated
        trailing ids are only retained if they appear in some edge.
        """
        return _build(edges, original_ids=original_ids)

    def neighbors(self, u):
        """Sorted neighbor ids of u (read-only view)."""
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def degree(self, u):
        return int(self.indptr[u + 1] - self.indptr[u])

    @property
    def degrees(self):
        return np.diff(self.indptr)

    @property
    def adjacency(self):
        """Per-node sorted neighbor lists (materialized; prefer neighbors())."""
        return [self.neighbors(u).tolist() for u in range(self.node_count)]

    def to_original(self, internal_ids):
        """Map internal ids back to the ids used in the source file."""
        return [int(self.original_ids[i]) for i in internal_ids]

    def to_internal(self, original_ids):
        """Map source-file ids to internal ids; unknown ids raise."""
        lookup = {int(o): i for i, o in enumerate(self.original_ids)}
        try:
            return [lookup[int(o)] for o in original_ids]
        except KeyError as exc:
            raise GraphLoadError(f"unknown node id {exc.args[0]}") from None


@dataclass(frozen=True)
class GraphMetrics:
    """Whole-graph statistics for a connected graph."""

    diameter: int
    average_shortest_path: float
    average_degree: float
    clustering_coefficient: float

    def as_dict(self):
        return {
            "diameter": self.diameter,
            "average_shortest_path": self.average_shortest_path,
            "average_degree": self.average_degree,
            "clustering_coefficient": self.clustering_coefficient,
        }


def _build(edges, original_ids=None):
    pairs = set()
    max_id = -1
    for u, v in edges:
        u, v = int(u), int(v)
        if u < 0 or v < 0:
            raise GraphLoadError(f"negative node id in edge ({u}, {v})")
        if u == v:
            continue
        pairs.add((u, v) if u < v else (v, u))
        max_id = max(max_id, u, v)
    if not pairs:
        raise GraphLoadError("graph has no edges after filtering")
    n = max_id + 1
    edge_arr = np.array(sorted(pairs), dtype=np.int64)
    heads = np.concatenate([edge_arr[:, 0], edge_arr[:, 1]])
    tails = np.concatenate([edge_arr[:, 1], edge_arr[:, 0]])
    order = np.lexsort((tails, heads))
    heads, tails = heads[order], tails[order]
    indptr = np.zeros(n + 1, dtype=np.int32)
    np.add.at(indptr, heads + 1, 1)
    indptr = np.cumsum(indptr, dtype=np.int32)
    indices = tails.astype(np.int32)
    if original_ids is None:
        original_ids = np.arange(n, dtype=np.int64)
    else:
        original_ids = np.asarray(original_ids, dtype=np.int64)
    return Graph(
        node_count=n,
        edge_count=len(pairs),
        indptr=indptr,
        indices=indices,
        original_ids=original_ids,
    )


def load_edge_list(path, restrict_to_largest_component=False):
    """Load an undirected graph from a whitespace edge-list file.

    Lines starting with '#' are comments. Self-loops are dropped,
    duplicate edges collapsed, and node ids remapped to a dense
    0-based range (sorted by original id; mapping kept on the graph).
    """
    edges = []
    seen = set()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise GraphLoadError(
                        f"{path}: line {line_no}: expected two node ids, got {line!r}"
                    )
                try:
                    u, v = int(parts[0]), int(parts[1])
                except ValueError:
                    raise GraphLoadError(
                        f"{path}: line {line_no}: non-integer node id in {line!r}"
                    ) from None
                if u < 0 or v < 0:
                    raise GraphLoadError(
                        f"{path}: line {line_no}: negative node id in {line!r}"
                    )
                edges.append((u, v))
                seen.add(u)
                seen.add(v)
    except OSError as exc:
        raise GraphLoadError(f"cannot read {path}: {exc}") from exc

    edges = [(u, v) for u, v in edges if u != v]
    if not edges:
        raise GraphLoadError(f"{path}: no edges remain after filtering")

    original = np.array(sorted({u for e in edges for u in e}), dtype=np.int64)
    remap = {int(o): i for i, o in enumerate(original)}
    dense = [(remap[u], remap[v]) for u, v in edges]
    g = _build(dense, original_ids=original)

    if restrict_to_largest_component:
        g = _largest_component(g)
    return g


def write_edge_list(g, path):
    """Write one `u v` line per undirected edge, in original ids."""
    orig = g.original_ids
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for u in range(g.node_count):
            for v in g.neighbors(u):
                if u < v:
                    fh.write(f"{orig[u]} {orig[v]}\n")


def connected_components(g):
    """List of node-id arrays, one per component, largest first."""
    remaining = np.ones(g.node_count, dtype=bool)
    comps = []
    while remaining.any():
        seed = int(np.flatnonzero(remaining)[0])
        dist = kernels.bfs_row(g.indptr, g.indices, seed)
        members = np.flatnonzero(dist >= 0)
        comps.append(members)
        remaining[members] = False
    comps.sort(key=len, reverse=True)
    return comps


def _largest_component(g):
    comps = connected_components(g)
    if len(comps) == 1:
        return g
    keep = comps[0]
    remap = {int(old): new for new, old in enumerate(keep)}
    keep_set = set(remap)
    dense = [
        (remap[u], remap[int(v)])
        for u in keep_set
        for v in g.neighbors(u)
        if u < v and int(v) in keep_set
    ]
    return _build(dense, original_ids=g.original_ids[keep])


def shortest_path_lengths(g, source):
    """Geodesic distances from source as float64; unreachable = math.inf.

    Infinity is used instead of an integer sentinel so an unreachable
    distance can never slip into a sum unnoticed.
    """
    if not 0 <= source < g.node_count:
        raise ValueError(f"source {source} out of range [0, {g.node_count})")
    raw = kernels.bfs_row(g.indptr, g.indices, source)
    dist = raw.astype(np.float64)
    dist[raw < 0] = math.inf
    return dist


def pairwise_distances(g, nodes):
    """Symmetric geodesic-distance matrix between the listed nodes.

    One BFS per listed node (symmetry fills the final row). Raises
    UnreachablePairError naming the first disconnected pair.
    """
    nodes = [int(u) for u in nodes]
    if len(nodes) < 2:
        raise ValueError("need at least 2 nodes")
    if len(set(nodes)) != len(nodes):
        raise ValueError(f"duplicate node in list: {nodes}")
    for u in nodes:
        if not 0 <= u < g.node_count:
            raise ValueError(f"node {u} out of range [0, {g.node_count})")
    k = len(nodes)
    mat = np.zeros((k, k), dtype=np.int64)
    for i, u in enumerate(nodes[:-1]):
        row = kernels.bfs_row(g.indptr, g.indices, u)
        for j in range(i + 1, k):
            d = int(row[nodes[j]])
            if d < 0:
                raise UnreachablePairError(u, nodes[j])
            mat[i, j] = mat[j, i] = d
    return mat


def is_connected(g):
    dist = kernels.bfs_row(g.indptr, g.indices, 0)
    return bool((dist >= 0).all())


def global_metrics(g):
    """Exact diameter, mean geodesic distance, mean degree, mean local clustering.

    Runs a full BFS sweep (one traversal per node). Clustering is the
    mean of per-node local coefficients with degree < 2 contributing 0.
    """
    ecc, dist_sums, reach_counts = kernels.sweep_stats(g.indptr, g.indices)
    if int(reach_counts.min()) != g.node_count:
        raise DisconnectedGraphError(
            "graph is disconnected; load with restrict_to_largest_component=True "
            "(CLI: --largest-component)"
        )
    n = g.node_count
    diameter = int(ecc.max())
    average_shortest_path = float(dist_sums.sum()) / (n * (n - 1))
    average_degree = 2.0 * g.edge_count / n
    tri = kernels.triangle_counts(g.indptr, g.indices)
    deg = g.degrees.astype(np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        local = np.where(deg >= 2, 2.0 * tri / (deg * (deg - 1.0)), 0.0)
    return GraphMetrics(
        diameter=diameter,
        average_shortest_path=average_shortest_path,
        average_degree=average_degree,
        clustering_coefficient=float(local.mean()),
    )


def centralities(g, nodes):
    """Degree, betweenness, and closeness for the listed nodes.

    Betweenness is raw Brandes accumulation (fractional split over
    shortest-path multiplicities, endpoints excluded, no normalization).
    Closeness is (n - 1) / sum of distances.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("centralities require a connected graph")
    nodes = [int(u) for u in nodes]
    bc = kernels.betweenness(g.indptr, g.indices)
    out = []
    for u in nodes:
        row = kernels.bfs_row(g.indptr, g.indices, u)
        out.append(
            {
                "node": u,
                "degree": g.degree(u),
                "betweenness": float(bc[u]),
                "closeness": (g.node_count - 1) / float(row.sum()),
            }
        )
    return out


def degree_histogram(g):
    """Sorted (degree, count) pairs; counts sum to node_count."""
    values, counts = np.unique(g.degrees, return_counts=True)
    return [(int(d), int(c)) for d, c in zip(values, counts)]
