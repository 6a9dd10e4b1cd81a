# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled graph kernels: all-sources Brandes/BFS pass, triangle counting,
component labeling. Semantics match ``_pykernels`` exactly (same traversal
and accumulation order)."""

import numpy as np


def betweenness_distance_pass(const int[::1] indptr, const int[::1] indices, int n):
    """All-sources BFS pass shared by betweenness and the distance features.

    Returns (bc_raw, dist_sum, reach, ecc); see the pure-Python twin for the
    field meanings.
    """
    bc_arr = np.zeros(n, dtype=np.float64)
    dist_sum_arr = np.zeros(n, dtype=np.int64)
    reach_arr = np.zeros(n, dtype=np.int32)
    ecc_arr = np.zeros(n, dtype=np.int32)
    dist_arr = np.empty(n, dtype=np.int32)
    sigma_arr = np.empty(n, dtype=np.float64)
    delta_arr = np.empty(n, dtype=np.float64)
    order_arr = np.empty(max(n, 1), dtype=np.int32)

    cdef double[::1] bc = bc_arr
    cdef long long[::1] dist_sum = dist_sum_arr
    cdef int[::1] reach = reach_arr
    cdef int[::1] ecc = ecc_arr
    cdef int[::1] dist = dist_arr
    cdef double[::1] sigma = sigma_arr
    cdef double[::1] delta = delta_arr
    cdef int[::1] order = order_arr

    cdef Py_ssize_t s, v, w, i, e
    cdef int head, tail, dv1, dw1, d, smax
    cdef long long ssum
    cdef double sv, coef

    for s in range(n):
        for v in range(n):
            dist[v] = -1
            sigma[v] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = <int> s
        head = 0
        tail = 1
        while head < tail:
            v = order[head]
            head += 1
            dv1 = dist[v] + 1
            sv = sigma[v]
            for e in range(indptr[v], indptr[v + 1]):
                w = indices[e]
                if dist[w] < 0:
                    dist[w] = dv1
                    order[tail] = <int> w
                    tail += 1
                if dist[w] == dv1:
                    sigma[w] += sv
        ssum = 0
        smax = 0
        for i in range(tail):
            v = order[i]
            d = dist[v]
            ssum += d
            if d > smax:
                smax = d
            delta[v] = 0.0
        dist_sum[s] = ssum
        reach[s] = tail - 1
        ecc[s] = smax
        for i in range(tail - 1, -1, -1):
            w = order[i]
            dw1 = dist[w] - 1
            coef = (1.0 + delta[w]) / sigma[w]
            for e in range(indptr[w], indptr[w + 1]):
                v = indices[e]
                if dist[v] == dw1:
                    delta[v] += sigma[v] * coef
            if w != s:
                bc[w] += delta[w]
    return bc_arr, dist_sum_arr, reach_arr, ecc_arr


def triangle_counts(const int[::1] indptr, const int[::1] indices, int n):
    """Number of triangles incident to each vertex (sorted-adjacency merge)."""
    tri_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] tri = tri_arr
    cdef Py_ssize_t u, e, i, j, i_end, j_end
    cdef int v, a, b
    for u in range(n):
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            if v <= u:
                continue
            i = indptr[u]
            i_end = indptr[u + 1]
            j = indptr[v]
            j_end = indptr[v + 1]
            while i < i_end and j < j_end:
                a = indices[i]
                if a <= v:
                    i += 1
                    continue
                b = indices[j]
                if b <= v:
                    j += 1
                    continue
                if a == b:
                    tri[u] += 1
                    tri[v] += 1
                    tri[a] += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
    return tri_arr


def component_labels(const int[::1] indptr, const int[::1] indices, int n):
    """Label each vertex with the smallest vertex id in its component."""
    labels_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(max(n, 1), dtype=np.int32)
    cdef int[::1] labels = labels_arr
    cdef int[::1] queue = queue_arr
    cdef Py_ssize_t s, v, w, e
    cdef int head, tail
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = <int> s
        queue[0] = <int> s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            for e in range(indptr[v], indptr[v + 1]):
                w = indices[e]
                if labels[w] < 0:
                    labels[w] = <int> s
                    queue[tail] = <int> w
                    tail += 1
    return labels_arr
