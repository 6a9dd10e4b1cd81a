"""Immutable sparse undirected simple graphs over dense integer vertices."""
from __future__ import annotations

import numpy as np

from . import kernels


class Graph:
    """Undirected simple graph with canonical (u < v) edges and CSR adjacency.

    Instances are immutable after construction and safe to share across
    worker processes. Build them with :func:`graph_from_edges`; generators
    use the unchecked fast path internally.
    """

    __slots__ = ("n", "edge_array", "indptr", "indices")

    def __init__(self, n: int, edge_array: np.ndarray, indptr: np.ndarray, indices: np.ndarray):
        self.n = n
        self.edge_array = edge_array
        self.indptr = indptr
        self.indices = indices

    @classmethod
    def _from_canonical(cls, n: int, edges: np.ndarray) -> "Graph":
        """Build from a deduplicated (m, 2) array with u < v, rows lexsorted."""
        edges = np.ascontiguousarray(edges, dtype=np.int32).reshape(-1, 2)
        m = edges.shape[0]
        endpoints = np.concatenate([edges[:, 0], edges[:, 1]])
        partners = np.concatenate([edges[:, 1], edges[:, 0]])
        order = np.lexsort((partners, endpoints))
        indices = np.ascontiguousarray(partners[order], dtype=np.int32)
        indptr = np.zeros(n + 1, dtype=np.int32)
        if m:
            np.cumsum(np.bincount(endpoints, minlength=n), out=indptr[1:])
        for arr in (edges, indptr, indices):
            arr.setflags(write=False)
        return cls(n, edges, indptr, indices)

    @property
    def num_edges(self) -> int:
        return self.edge_array.shape[0]

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edge_array}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edge_array, other.edge_array)

    __hash__ = None  # mutable-free but not hashable; compare by content

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def graph_from_edges(n: int, edge_list) -> Graph:
    """Construct a graph from vertex count and an iterable of (u, v) pairs.

    Pairs may arrive in either order and may repeat; they are canonicalized
    to u < v and deduplicated. Self-loops and out-of-range endpoints raise
    ValueError.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    arr = np.asarray(list(edge_list) if not isinstance(edge_list, np.ndarray) else edge_list,
                     dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edge list must be a sequence of (u, v) pairs")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError(f"edge endpoint out of range [0, {n})")
    if arr.size and np.any(arr[:, 0] == arr[:, 1]):
        bad = arr[arr[:, 0] == arr[:, 1]][0]
        raise ValueError(f"self-loop ({bad[0]}, {bad[0]}) not allowed")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    canon = np.unique(np.stack([lo, hi], axis=1), axis=0) if arr.size else arr
    return Graph._from_canonical(n, canon)


def graph_density(g: Graph) -> float:
    """Edge count over the number of possible pairs n(n-1)/2. Requires n >= 2."""
    if g.n < 2:
        raise ValueError("density is undefined for graphs with fewer than 2 vertices")
    return g.num_edges / (g.n * (g.n - 1) / 2)


def connected_components(g: Graph) -> list[list[int]]:
    """Partition vertices into connected components, ordered by smallest member."""
    labels = kernels.component_labels(g.indptr, g.indices, g.n)
    groups: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        groups.setdefault(int(lab), []).append(v)
    return [groups[lab] for lab in sorted(groups)]
