"""Independent brute-force oracles for feature testing.

Deliberately naive: Floyd-Warshall distances, explicit enumeration of all
shortest paths for betweenness, triple enumeration for triangles. Nothing
here shares code with the library kernels.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

INF = float("inf")


def floyd_warshall(g) -> np.ndarray:
    n = g.n
    dist = np.full((n, n), INF)
    np.fill_diagonal(dist, 0.0)
    for u, v in g.edge_array:
        dist[u, v] = 1.0
        dist[v, u] = 1.0
    for k in range(n):
        dist = np.minimum(dist, dist[:, k:k + 1] + dist[k:k + 1, :])
    return dist


def _all_shortest_paths(g, dist, s, t):
    """Every shortest s-t path as a vertex tuple, via recursive extension."""
    if dist[s, t] == INF:
        return []
    adj = {v: set(map(int, g.neighbors(v))) for v in range(g.n)}
    paths = []

    def extend(path):
        head = path[-1]
        if head == t:
            paths.append(tuple(path))
            return
        for w in sorted(adj[head]):
            if dist[s, w] == dist[s, head] + 1 and dist[w, t] == dist[s, t] - dist[s, w]:
                extend(path + [w])

    extend([s])
    return paths


def betweenness_reference(g) -> np.ndarray:
    """Normalized betweenness by full shortest-path enumeration."""
    n = g.n
    dist = floyd_warshall(g)
    score = np.zeros(n)
    for s, t in combinations(range(n), 2):
        paths = _all_shortest_paths(g, dist, s, t)
        if not paths:
            continue
        for path in paths:
            for v in path[1:-1]:
                score[v] += 1.0 / len(paths)
    return score / ((n - 1) * (n - 2) / 2)


def degree_reference(g) -> np.ndarray:
    n = g.n
    deg = np.zeros(n)
    for u, v in g.edge_array:
        deg[u] += 1
        deg[v] += 1
    return deg / (n - 1)


def closeness_reference(g) -> np.ndarray:
    n = g.n
    dist = floyd_warshall(g)
    out = np.zeros(n)
    for v in range(n):
        finite = [dist[v, w] for w in range(n) if w != v and dist[v, w] < INF]
        r = len(finite)
        if r > 0:
            out[v] = (r / (n - 1)) * (r / sum(finite))
    return out


def aspl_reference(g) -> np.ndarray:
    n = g.n
    dist = floyd_warshall(g)
    out = np.zeros(n)
    for v in range(n):
        finite = [dist[v, w] for w in range(n) if w != v and dist[v, w] < INF]
        if finite:
            out[v] = sum(finite) / len(finite)
    return out


def triangles_reference(g) -> np.ndarray:
    n = g.n
    edges = g.edge_set()
    tri = np.zeros(n)
    for a, b, c in combinations(range(n), 3):
        if (a, b) in edges and (b, c) in edges and (a, c) in edges:
            tri[a] += 1
            tri[b] += 1
            tri[c] += 1
    return tri


def clustering_reference(g) -> np.ndarray:
    n = g.n
    edges = g.edge_set()
    out = np.zeros(n)
    for v in range(n):
        nbrs = sorted(map(int, g.neighbors(v)))
        d = len(nbrs)
        if d < 2:
            continue
        links = sum(1 for a, b in combinations(nbrs, 2) if (min(a, b), max(a, b)) in edges)
        out[v] = links / (d * (d - 1) / 2)
    return out


def components_reference(g) -> list[set[int]]:
    dist = floyd_warshall(g)
    seen = set()
    comps = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = {w for w in range(g.n) if dist[v, w] < INF}
        seen |= comp
        comps.append(comp)
    return comps


def extremes_reference(g) -> tuple[int, int]:
    """Largest-component diameter and radius, ties to the smallest member."""
    dist = floyd_warshall(g)
    comps = components_reference(g)
    best = max(comps, key=lambda c: (len(c), -min(c)))
    members = sorted(best)
    if len(members) == 1:
        return 0, 0
    eccs = [max(dist[v, w] for w in members) for v in members]
    return int(max(eccs)), int(min(eccs))


# Independent single-purpose BFS implementations (used to check that the
# shared all-sources pass agrees with per-feature recomputation).

def bfs_distances(g, s) -> list[float]:
    dist = [INF] * g.n
    dist[s] = 0
    queue = [s]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w in g.neighbors(v):
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                queue.append(int(w))
    return dist


def closeness_bfs(g) -> np.ndarray:
    n = g.n
    out = np.zeros(n)
    for v in range(n):
        dist = bfs_distances(g, v)
        finite = [d for w, d in enumerate(dist) if w != v and d < INF]
        if finite:
            out[v] = (len(finite) / (n - 1)) * (len(finite) / sum(finite))
    return out


def aspl_bfs(g) -> np.ndarray:
    n = g.n
    out = np.zeros(n)
    for v in range(n):
        dist = bfs_distances(g, v)
        finite = [d for w, d in enumerate(dist) if w != v and d < INF]
        if finite:
            out[v] = sum(finite) / len(finite)
    return out


def eccentricities_bfs(g) -> np.ndarray:
    out = np.zeros(g.n)
    for v in range(g.n):
        dist = bfs_distances(g, v)
        finite = [d for d in dist if d < INF]
        out[v] = max(finite)
    return out
