"""Pure-Python graph kernels, used when the compiled extension is unavailable.

These mirror the C implementations operation-for-operation (same traversal
order, same floating-point accumulation order) so both backends agree to
within rounding on every input.
"""
from __future__ import annotations

import numpy as np


def betweenness_distance_pass(indptr, indices, n: int):
    """All-sources BFS pass shared by betweenness and the distance features.

    Returns (bc_raw, dist_sum, reach, ecc) where bc_raw is the unnormalized
    Brandes accumulation over ordered pairs, dist_sum[s] the sum of hop
    distances from s to its reachable vertices, reach[s] the count of those
    vertices, and ecc[s] the eccentricity of s within its component.
    """
    ip = np.asarray(indptr).tolist()
    nbr = np.asarray(indices).tolist()
    bc = np.zeros(n, dtype=np.float64)
    dist_sum = np.zeros(n, dtype=np.int64)
    reach = np.zeros(n, dtype=np.int32)
    ecc = np.zeros(n, dtype=np.int32)

    for s in range(n):
        dist = [-1] * n
        sigma = [0.0] * n
        delta = [0.0] * n
        order: list[int] = [s]
        dist[s] = 0
        sigma[s] = 1.0
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            dv1 = dist[v] + 1
            sv = sigma[v]
            for w in nbr[ip[v]:ip[v + 1]]:
                if dist[w] < 0:
                    dist[w] = dv1
                    order.append(w)
                if dist[w] == dv1:
                    sigma[w] += sv
        ssum = 0
        smax = 0
        for v in order:
            d = dist[v]
            ssum += d
            if d > smax:
                smax = d
        dist_sum[s] = ssum
        reach[s] = len(order) - 1
        ecc[s] = smax
        # Dependency accumulation in reverse BFS order; predecessors of w are
        # found by rescanning its adjacency for vertices one level closer.
        for i in range(len(order) - 1, -1, -1):
            w = order[i]
            dw1 = dist[w] - 1
            coef = (1.0 + delta[w]) / sigma[w]
            for v in nbr[ip[w]:ip[w + 1]]:
                if dist[v] == dw1:
                    delta[v] += sigma[v] * coef
            if w != s:
                bc[w] += delta[w]
    return bc, dist_sum, reach, ecc


def triangle_counts(indptr, indices, n: int):
    """Number of triangles incident to each vertex (sorted-adjacency merge)."""
    ip = np.asarray(indptr).tolist()
    nbr = np.asarray(indices).tolist()
    tri = np.zeros(n, dtype=np.int64)
    for u in range(n):
        for e in range(ip[u], ip[u + 1]):
            v = nbr[e]
            if v <= u:
                continue
            # common neighbors w > v so each triangle is found exactly once
            i, i_end = ip[u], ip[u + 1]
            j, j_end = ip[v], ip[v + 1]
            while i < i_end and j < j_end:
                a = nbr[i]
                if a <= v:
                    i += 1
                    continue
                b = nbr[j]
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
    return tri


def component_labels(indptr, indices, n: int):
    """Label each vertex with the smallest vertex id in its component."""
    ip = np.asarray(indptr).tolist()
    nbr = np.asarray(indices).tolist()
    labels = np.full(n, -1, dtype=np.int32)
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = s
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in nbr[ip[v]:ip[v + 1]]:
                if labels[w] < 0:
                    labels[w] = s
                    queue.append(w)
    return labels
