# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels: BFS rows, full sweeps, triangles, betweenness.

Same contracts as committee_select.kernels.pure; CSR inputs must be
int32 with sorted neighbor lists.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "compiled"


def bfs_row(const cnp.int32_t[::1] indptr, const cnp.int32_t[::1] indices, int source):
    cdef int n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    _bfs_fill(indptr, indices, source, dist, queue)
    return dist_arr


cdef int _bfs_fill(const cnp.int32_t[::1] indptr, const cnp.int32_t[::1] indices,
                   int source, cnp.int32_t[::1] dist,
                   cnp.int32_t[::1] queue) nogil:
    """Fill dist (pre-set to -1) from source; return nodes reached."""
    cdef int head = 0, tail = 0
    cdef int u, v, j, du
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return tail


def sweep_stats(const cnp.int32_t[::1] indptr, const cnp.int32_t[::1] indices):
    cdef int n = indptr.shape[0] - 1
    ecc_arr = np.zeros(n, dtype=np.int32)
    sums_arr = np.zeros(n, dtype=np.int64)
    reach_arr = np.zeros(n, dtype=np.int32)
    dist_arr = np.empty(n, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] ecc = ecc_arr
    cdef cnp.int64_t[::1] sums = sums_arr
    cdef cnp.int32_t[::1] reach = reach_arr
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef int s, i, reached
    cdef int emax
    cdef long long total
    with nogil:
        for s in range(n):
            for i in range(n):
                dist[i] = -1
            reached = _bfs_fill(indptr, indices, s, dist, queue)
            emax = 0
            total = 0
            for i in range(n):
                if dist[i] > 0:
                    total += dist[i]
                    if dist[i] > emax:
                        emax = dist[i]
            ecc[s] = emax
            sums[s] = total
            reach[s] = reached
    return ecc_arr, sums_arr, reach_arr


def triangle_counts(const cnp.int32_t[::1] indptr, const cnp.int32_t[::1] indices):
    cdef int n = indptr.shape[0] - 1
    tri_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] tri = tri_arr
    cdef int u, v, w, j, a, b, au, av
    with nogil:
        for u in range(n):
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if v <= u:
                    continue
                # two-pointer intersection of sorted adj(u), adj(v), w > v only
                a = indptr[u]
                b = indptr[v]
                while a < indptr[u + 1] and b < indptr[v + 1]:
                    au = indices[a]
                    av = indices[b]
                    if au < av:
                        a += 1
                    elif av < au:
                        b += 1
                    else:
                        if au > v:
                            tri[u] += 1
                            tri[v] += 1
                            tri[au] += 1
                        a += 1
                        b += 1
    return tri_arr


def betweenness(const cnp.int32_t[::1] indptr, const cnp.int32_t[::1] indices):
    cdef int n = indptr.shape[0] - 1
    bc_arr = np.zeros(n, dtype=np.float64)
    dist_arr = np.empty(n, dtype=np.int32)
    order_arr = np.empty(n, dtype=np.int32)
    sigma_arr = np.empty(n, dtype=np.float64)
    delta_arr = np.empty(n, dtype=np.float64)
    cdef cnp.float64_t[::1] bc = bc_arr
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] order = order_arr
    cdef cnp.float64_t[::1] sigma = sigma_arr
    cdef cnp.float64_t[::1] delta = delta_arr
    cdef int s, u, v, j, i, head, tail, du, dw
    cdef double coeff
    with nogil:
        for s in range(n):
            for i in range(n):
                dist[i] = -1
                sigma[i] = 0.0
                delta[i] = 0.0
            dist[s] = 0
            sigma[s] = 1.0
            order[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = order[head]
                head += 1
                du = dist[u]
                for j in range(indptr[u], indptr[u + 1]):
                    v = indices[j]
                    if dist[v] < 0:
                        dist[v] = du + 1
                        order[tail] = v
                        tail += 1
                    if dist[v] == du + 1:
                        sigma[v] += sigma[u]
            for i in range(tail - 1, 0, -1):
                u = order[i]
                coeff = (1.0 + delta[u]) / sigma[u]
                dw = dist[u]
                for j in range(indptr[u], indptr[u + 1]):
                    v = indices[j]
                    if dist[v] == dw - 1:
                        delta[v] += sigma[v] * coeff
                bc[u] += delta[u]
    bc_arr /= 2.0
    return bc_arr
