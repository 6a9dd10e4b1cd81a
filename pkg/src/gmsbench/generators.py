"""Seeded Erdos-Renyi and stochastic block model generators plus edge rewiring."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .graph import Graph

_U64 = 2**64


@dataclass(frozen=True)
class Seed:
    """Deterministic random-stream handle: (root, index) names one stream.

    ``derive(*keys)`` folds context (strings/ints) into a new root so that
    independent parts of a run get independent streams regardless of
    scheduling order; ``at(i)`` selects the i-th instance stream under the
    current root.
    """

    root: int
    index: int = 0

    def __post_init__(self):
        if not (0 <= self.root < _U64):
            raise ValueError("seed root must be an unsigned 64-bit integer")
        if self.index < 0:
            raise ValueError("seed index must be non-negative")

    def rng(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence((self.root, self.index))))

    def derive(self, *keys) -> "Seed":
        h = hashlib.blake2b(digest_size=8)
        h.update(self.root.to_bytes(8, "big"))
        h.update(self.index.to_bytes(8, "big"))
        for k in keys:
            if isinstance(k, str):
                raw = k.encode("utf-8")
                h.update(b"s" + len(raw).to_bytes(2, "big") + raw)
            elif isinstance(k, (int, np.integer)):
                h.update(b"i" + int(k).to_bytes(8, "big", signed=True))
            else:
                raise TypeError(f"seed derivation keys must be str or int, got {type(k)!r}")
        return Seed(int.from_bytes(h.digest(), "big"), 0)

    def at(self, index: int) -> "Seed":
        return replace(self, index=index)


@dataclass(frozen=True)
class ErParams:
    """G(n, p): every vertex pair is an edge independently with probability p."""

    n: int
    p: float

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("ER graphs need at least 2 vertices")
        if not (0.0 <= self.p <= 1.0):
            raise ValueError(f"edge probability must lie in [0, 1], got {self.p}")

    def density(self) -> float:
        return self.p


@dataclass(frozen=True)
class SbmParams:
    """Planted-partition SBM with k contiguous near-equal blocks.

    Blocks are vertex ranges of size n//k, remainder attached to the last
    block. p_in >= p_out is required; equality is the diagnostic mode in
    which the model coincides with G(n, (p_in+p_out)/2).
    """

    n: int
    p_in: float
    p_out: float
    k: int = 2

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("SBM graphs need at least 2 vertices")
        if self.k < 2:
            raise ValueError("SBM needs at least 2 blocks")
        if not (0.0 <= self.p_out <= 1.0 and 0.0 <= self.p_in <= 1.0):
            raise ValueError("block probabilities must lie in [0, 1]")
        if self.p_in < self.p_out:
            raise ValueError("p_in must be at least p_out")

    def block_sizes(self) -> list[int]:
        base = self.n // self.k
        if base == 0:
            raise ValueError("more blocks than vertices")
        sizes = [base] * self.k
        sizes[-1] += self.n - base * self.k
        return sizes

    def pair_counts(self) -> tuple[int, int]:
        """(within-block pair count, cross-block pair count)."""
        within = sum(s * (s - 1) // 2 for s in self.block_sizes())
        total = self.n * (self.n - 1) // 2
        return within, total - within

    def density(self) -> float:
        return expected_density(self).exact


class ExpectedDensity(NamedTuple):
    exact: float
    approx: float


def expected_density(params: SbmParams) -> ExpectedDensity:
    """Exact expected density of an SBM, plus the (p_in+p_out)/2 approximation.

    The approximation is what the parameter grid uses to bucket SBM pairs
    against equal-density ER graphs; the exact value differs in the fourth
    decimal because within- and cross-block pair counts are not equal.
    """
    w, c = params.pair_counts()
    exact = (params.p_in * w + params.p_out * c) / (w + c)
    return ExpectedDensity(exact, (params.p_in + params.p_out) / 2)


@lru_cache(maxsize=4)
def _pair_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    iu, iv = np.triu_indices(n, k=1)
    return iu.astype(np.int32), iv.astype(np.int32)


@lru_cache(maxsize=4)
def _within_mask(n: int, k: int, sizes: tuple[int, ...]) -> np.ndarray:
    block = np.repeat(np.arange(k, dtype=np.int32), sizes)
    iu, iv = _pair_indices(n)
    return block[iu] == block[iv]


def generate_er(params: ErParams, seed: Seed) -> Graph:
    """Sample G(n, p) by one Bernoulli draw per vertex pair."""
    iu, iv = _pair_indices(params.n)
    mask = seed.rng().random(iu.shape[0]) < params.p
    edges = np.stack([iu[mask], iv[mask]], axis=1)
    return Graph._from_canonical(params.n, edges)


def generate_sbm(params: SbmParams, seed: Seed) -> Graph:
    """Sample the SBM by one Bernoulli draw per pair, threshold by block pair.

    Uses the same uniform draw sequence as :func:`generate_er`, so with
    p_in == p_out == p the result is identical to the ER sample for the
    same seed.
    """
    iu, iv = _pair_indices(params.n)
    within = _within_mask(params.n, params.k, tuple(params.block_sizes()))
    thresh = np.where(within, params.p_in, params.p_out)
    mask = seed.rng().random(iu.shape[0]) < thresh
    edges = np.stack([iu[mask], iv[mask]], axis=1)
    return Graph._from_canonical(params.n, edges)


def rewire_uniform(g: Graph, fraction: float, seed: Seed) -> Graph:
    """Rewire floor(fraction * |E|) distinct edges chosen uniformly.

    Each selected edge keeps one uniformly chosen endpoint; the other is
    replaced by a vertex drawn uniformly among those that create neither a
    self-loop nor a duplicate of a currently present edge. Edge count is
    preserved; edges with no valid replacement (near-complete graphs) are
    kept unchanged.
    """
    graph, _ = rewire_uniform_with_stats(g, fraction, seed)
    return graph


def rewire_uniform_with_stats(g: Graph, fraction: float, seed: Seed) -> tuple[Graph, int]:
    """Like :func:`rewire_uniform` but also reports how many edges were skipped."""
    if not (0.0 <= fraction <= 1.0):
        raise ValueError(f"rewire fraction must lie in [0, 1], got {fraction}")
    n = g.n
    m = g.num_edges
    count = int(np.floor(fraction * m))
    if count == 0:
        return g, 0
    rng = seed.rng()
    chosen = rng.choice(m, size=count, replace=False)
    edges = g.edge_array.astype(np.int64).copy()
    present = {int(u) * n + int(v) for u, v in edges}
    skipped = 0
    for idx in chosen:
        u = int(edges[idx, 0])
        v = int(edges[idx, 1])
        old_key = u * n + v
        keep = u if int(rng.integers(2)) == 0 else v
        # the edge being rewired stays in the present set, so re-creating it
        # is not a valid replacement; edges removed by earlier rewires may be
        new_other = -1
        for _ in range(64):
            c = int(rng.integers(n))
            if c == keep:
                continue
            key = min(keep, c) * n + max(keep, c)
            if key in present:
                continue
            new_other = c
            break
        else:
            # dense neighborhood: enumerate the valid targets exactly
            valid = [w for w in range(n)
                     if w != keep and (min(keep, w) * n + max(keep, w)) not in present]
            if valid:
                new_other = valid[int(rng.integers(len(valid)))]
        if new_other < 0:
            skipped += 1
            continue
        a, b = min(keep, new_other), max(keep, new_other)
        present.discard(old_key)
        present.add(a * n + b)
        edges[idx, 0] = a
        edges[idx, 1] = b
    order = np.lexsort((edges[:, 1], edges[:, 0]))
    return Graph._from_canonical(n, edges[order]), skipped
