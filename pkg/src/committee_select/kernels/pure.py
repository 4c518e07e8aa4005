"""Pure NumPy graph kernels.

Fallback backend used when the compiled extension is unavailable.
All functions take a CSR adjacency (indptr int32[n+1], indices int32[2m])
with sorted neighbor lists, and match the compiled signatures exactly.
"""

import numpy as np

BACKEND_NAME = "pure"


def bfs_row(indptr, indices, source):
    """Hop distances from `source` to every node; -1 marks unreachable."""
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int32)
    depth = 0
    while frontier.size:
        depth += 1
        neigh = np.concatenate([indices[indptr[u]:indptr[u + 1]] for u in frontier])
        neigh = neigh[dist[neigh] < 0]
        if neigh.size == 0:
            break
        frontier = np.unique(neigh)
        dist[frontier] = depth
    return dist


def sweep_stats(indptr, indices):
    """One BFS per source: (eccentricity, sum of finite distances, nodes reached)."""
    n = indptr.shape[0] - 1
    ecc = np.zeros(n, dtype=np.int32)
    dist_sums = np.zeros(n, dtype=np.int64)
    reach_counts = np.zeros(n, dtype=np.int32)
    for s in range(n):
        dist = bfs_row(indptr, indices, s)
        reached = dist >= 0
        ecc[s] = dist.max(initial=0)
        dist_sums[s] = int(dist[reached].sum())
        reach_counts[s] = int(reached.sum())
    return ecc, dist_sums, reach_counts


def triangle_counts(indptr, indices):
    """Number of triangles through each node (sorted-adjacency intersection)."""
    n = indptr.shape[0] - 1
    tri = np.zeros(n, dtype=np.int64)
    neighbor_sets = [frozenset(indices[indptr[u]:indptr[u + 1]].tolist()) for u in range(n)]
    for u in range(n):
        for v in indices[indptr[u]:indptr[u + 1]]:
            if v <= u:
                continue
            # common neighbors w > v close the triangle u < v < w exactly once
            for w in neighbor_sets[u] & neighbor_sets[v]:
                if w > v:
                    tri[u] += 1
                    tri[v] += 1
                    tri[w] += 1
    return tri


def betweenness(indptr, indices):
    """Unnormalized shortest-path betweenness, endpoints excluded.

    Brandes accumulation without predecessor lists: in reverse BFS order,
    a node passes its dependency to any neighbor one hop closer to the
    source. Undirected double counting is halved at the end.
    """
    n = indptr.shape[0] - 1
    bc = np.zeros(n, dtype=np.float64)
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int32)
        sigma = np.zeros(n, dtype=np.float64)
        order = np.empty(n, dtype=np.int32)
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            u = order[head]
            head += 1
            du = dist[u]
            for v in indices[indptr[u]:indptr[u + 1]]:
                if dist[v] < 0:
                    dist[v] = du + 1
                    order[tail] = v
                    tail += 1
                if dist[v] == du + 1:
                    sigma[v] += sigma[u]
        delta = np.zeros(n, dtype=np.float64)
        for i in range(tail - 1, 0, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            dw = dist[w]
            for v in indices[indptr[w]:indptr[w + 1]]:
                if dist[v] == dw - 1:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
    return bc / 2.0
