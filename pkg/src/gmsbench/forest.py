"""From-scratch CART trees and a bagged random forest for ER-vs-SBM labels.

Splits use exact Gini impurity over thresholds at midpoints of consecutive
distinct feature values; feature importances are mean decrease in impurity.
Everything is deterministic given the config seed: each tree owns a stream
derived from (seed, tree index), so trees could be fit in any order or in
parallel with an identical result.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .generators import Seed

LABELS = ("er", "sbm")
ER, SBM = 0, 1


@dataclass(frozen=True)
class Sample:
    """One labeled feature row with generative provenance."""

    features: np.ndarray
    label: int
    meta: dict = field(default_factory=dict)


class Dataset:
    """Feature matrix with labels and per-row provenance metadata."""

    def __init__(self, X: np.ndarray, y: np.ndarray, feature_names: Sequence[str],
                 metas: Optional[Sequence[dict]] = None):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int8)
        if X.ndim != 2 or X.shape[0] != y.shape[0]:
            raise ValueError("feature matrix and labels must have matching row counts")
        if X.shape[1] != len(feature_names):
            raise ValueError("feature name count must match feature arity")
        if not np.all(np.isfinite(X)):
            raise ValueError("feature values must be finite")
        self.X = X
        self.y = y
        self.feature_names = tuple(feature_names)
        self.metas = list(metas) if metas is not None else [{} for _ in range(X.shape[0])]

    @classmethod
    def from_samples(cls, samples: Sequence[Sample], feature_names: Sequence[str]) -> "Dataset":
        X = np.stack([s.features for s in samples]) if samples else np.zeros((0, len(feature_names)))
        y = np.array([s.label for s in samples], dtype=np.int8)
        return cls(X, y, feature_names, [s.meta for s in samples])

    def project(self, indices: Sequence[int]) -> "Dataset":
        idx = list(indices)
        return Dataset(self.X[:, idx], self.y, [self.feature_names[i] for i in idx], self.metas)

    @property
    def n_features(self) -> int:
        return self.X.shape[1]

    def __len__(self) -> int:
        return self.X.shape[0]


@dataclass(frozen=True)
class ForestConfig:
    n_trees: int = 100
    mtry: Optional[int] = None  # None -> floor(sqrt(arity))
    max_depth: Optional[int] = None
    min_samples_split: int = 2
    seed: Seed = Seed(0)

    def __post_init__(self):
        if self.n_trees < 1:
            raise ValueError("forest needs at least one tree")
        if self.mtry is not None and self.mtry < 1:
            raise ValueError("mtry must be positive")
        if self.min_samples_split < 2:
            raise ValueError("min_samples_split must be at least 2")

    def resolved_mtry(self, arity: int) -> int:
        mtry = self.mtry if self.mtry is not None else max(1, int(np.floor(np.sqrt(arity))))
        if mtry > arity:
            raise ValueError(f"mtry {mtry} exceeds feature arity {arity}")
        return mtry


@dataclass
class TreeNode:
    """Internal node (feature, threshold, children) or leaf (class counts)."""

    feature: int = -1
    threshold: float = 0.0
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None
    counts: Optional[tuple[int, int]] = None

    @property
    def is_leaf(self) -> bool:
        return self.counts is not None


@dataclass
class Forest:
    trees: list[TreeNode]
    config: ForestConfig
    importances: np.ndarray
    feature_names: tuple[str, ...]

    @property
    def n_features(self) -> int:
        return len(self.feature_names)


def gini(class_counts) -> float:
    """Gini impurity 1 - sum((c_i/total)^2) of a count vector."""
    counts = np.asarray(class_counts, dtype=np.float64)
    if np.any(counts < 0):
        raise ValueError("class counts must be non-negative")
    total = counts.sum()
    if total <= 0:
        raise ValueError("gini undefined for an empty node")
    frac = counts / total
    return float(1.0 - np.sum(frac * frac))


def best_split(X: np.ndarray, y: np.ndarray, rows: np.ndarray,
               candidate_features: Sequence[int]):
    """Best (feature, threshold, impurity decrease) over candidate features.

    Thresholds are midpoints of consecutive distinct sorted values; the split
    maximizing the weighted Gini decrease wins, ties broken by lower feature
    index then lower threshold. Returns None when the node is pure or no
    candidate feature has two distinct values. Zero-decrease splits of impure
    nodes are allowed so plateaus (e.g. XOR layouts) still get separated.
    """
    k = rows.shape[0]
    sub_y = y[rows]
    total_one = int(sub_y.sum())
    parent = gini((k - total_one, total_one))
    if parent == 0.0:
        return None
    best = None
    positions = np.arange(1, k, dtype=np.float64)
    for f in candidate_features:
        vals = X[rows, f]
        order = np.argsort(vals, kind="stable")
        sv = vals[order]
        boundary = sv[:-1] < sv[1:]
        if not boundary.any():
            continue
        mids = (sv[:-1] + sv[1:]) / 2.0
        # guard against midpoints collapsing onto a side under rounding
        boundary &= (mids >= sv[:-1]) & (mids < sv[1:])
        if not boundary.any():
            continue
        left_one = np.cumsum(sub_y[order])[:-1].astype(np.float64)
        left_n = positions
        right_one = total_one - left_one
        right_n = k - left_n
        gl = 1.0 - ((left_one / left_n) ** 2 + ((left_n - left_one) / left_n) ** 2)
        gr = 1.0 - ((right_one / right_n) ** 2 + ((right_n - right_one) / right_n) ** 2)
        decrease = parent - (left_n * gl + right_n * gr) / k
        decrease = np.where(boundary, decrease, -np.inf)
        i = int(np.argmax(decrease))
        if decrease[i] == -np.inf or decrease[i] < 0:
            continue
        if best is None or decrease[i] > best[2]:
            best = (f, float(mids[i]), float(decrease[i]))
    return best


def _grow(X, y, rows, depth, cfg, mtry, arity, rng, n_root, importance) -> TreeNode:
    counts = (int(np.sum(y[rows] == ER)), int(np.sum(y[rows] == SBM)))
    if counts[0] == 0 or counts[1] == 0 or rows.shape[0] < cfg.min_samples_split:
        return TreeNode(counts=counts)
    if cfg.max_depth is not None and depth >= cfg.max_depth:
        return TreeNode(counts=counts)
    feats = np.sort(rng.choice(arity, size=mtry, replace=False))
    split = best_split(X, y, rows, feats)
    if split is None:
        return TreeNode(counts=counts)
    f, thr, dec = split
    importance[f] += rows.shape[0] / n_root * dec
    mask = X[rows, f] <= thr
    left = _grow(X, y, rows[mask], depth + 1, cfg, mtry, arity, rng, n_root, importance)
    right = _grow(X, y, rows[~mask], depth + 1, cfg, mtry, arity, rng, n_root, importance)
    return TreeNode(feature=f, threshold=thr, left=left, right=right)


def fit_tree(rows: Dataset, config: ForestConfig, stream) -> TreeNode:
    """Fit one CART tree on the given rows (no bootstrap) using ``stream``.

    ``stream`` is a Seed or an already-positioned numpy Generator; the forest
    passes the per-tree generator after drawing the bootstrap from it.
    """
    if len(rows) == 0:
        raise ValueError("cannot fit a tree on an empty dataset")
    rng = stream.rng() if isinstance(stream, Seed) else stream
    arity = rows.n_features
    mtry = config.resolved_mtry(arity)
    importance = np.zeros(arity)
    return _grow(rows.X, rows.y, np.arange(len(rows)), 0, config, mtry, arity, rng,
                 len(rows), importance)


def fit_forest(train: Dataset, config: ForestConfig) -> Forest:
    """Fit n_trees CART trees on bootstrap resamples; aggregate importances."""
    if len(train) == 0:
        raise ValueError("cannot fit a forest on an empty dataset")
    present = set(np.unique(train.y).tolist())
    if present != {ER, SBM}:
        raise ValueError("training set must contain both classes")
    arity = train.n_features
    mtry = config.resolved_mtry(arity)
    n = len(train)
    rows_all = np.arange(n)
    trees = []
    importance_sum = np.zeros(arity)
    for t in range(config.n_trees):
        rng = config.seed.derive("tree", t).rng()
        boot = rows_all[rng.integers(0, n, size=n)]
        imp = np.zeros(arity)
        trees.append(_grow(train.X, train.y, boot, 0, config, mtry, arity, rng, n, imp))
        importance_sum += imp
    importances = importance_sum / config.n_trees
    total = importances.sum()
    if total > 0:
        importances = importances / total
    return Forest(trees, config, importances, train.feature_names)


def _leaf_for(tree: TreeNode, x: np.ndarray) -> TreeNode:
    node = tree
    while not node.is_leaf:
        node = node.left if x[node.feature] <= node.threshold else node.right
    return node


def predict_proba(forest: Forest, x) -> np.ndarray:
    """Average of per-tree leaf class proportions; sums to 1."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (forest.n_features,):
        raise ValueError(f"expected {forest.n_features} features, got shape {x.shape}")
    acc = np.zeros(2)
    for tree in forest.trees:
        c = _leaf_for(tree, x).counts
        acc += np.array(c, dtype=np.float64) / (c[0] + c[1])
    return acc / len(forest.trees)


def predict_label(forest: Forest, x) -> int:
    """Argmax class; ties go to ER."""
    p = predict_proba(forest, x)
    return SBM if p[SBM] > p[ER] else ER


def evaluate_accuracy(forest: Forest, test: Dataset) -> float:
    if len(test) == 0:
        raise ValueError("cannot evaluate on an empty dataset")
    correct = sum(1 for i in range(len(test)) if predict_label(forest, test.X[i]) == test.y[i])
    return correct / len(test)


def top_k_features(importances, k: int) -> list[int]:
    """Indices of the k largest importances, descending, ties to lower index."""
    imp = np.asarray(importances, dtype=np.float64)
    if not (1 <= k <= imp.shape[0]):
        raise ValueError(f"k must lie in [1, {imp.shape[0]}], got {k}")
    order = sorted(range(imp.shape[0]), key=lambda i: (-imp[i], i))
    return order[:k]


# --- versioned JSON serialization -----------------------------------------

FOREST_FORMAT = "gmsbench-forest"
FOREST_VERSION = 1


def _node_to_dict(node: TreeNode) -> dict:
    if node.is_leaf:
        return {"counts": list(node.counts)}
    return {
        "feature": node.feature,
        "threshold": node.threshold,
        "left": _node_to_dict(node.left),
        "right": _node_to_dict(node.right),
    }


def _node_from_dict(d: dict) -> TreeNode:
    if "counts" in d:
        return TreeNode(counts=(int(d["counts"][0]), int(d["counts"][1])))
    return TreeNode(feature=int(d["feature"]), threshold=float(d["threshold"]),
                    left=_node_from_dict(d["left"]), right=_node_from_dict(d["right"]))


def forest_to_dict(forest: Forest) -> dict:
    cfg = forest.config
    return {
        "format": FOREST_FORMAT,
        "version": FOREST_VERSION,
        "classes": list(LABELS),
        "feature_names": list(forest.feature_names),
        "config": {
            "n_trees": cfg.n_trees,
            "mtry": cfg.mtry,
            "max_depth": cfg.max_depth,
            "min_samples_split": cfg.min_samples_split,
            "seed_root": cfg.seed.root,
            "seed_index": cfg.seed.index,
        },
        "importances": [float(v) for v in forest.importances],
        "trees": [_node_to_dict(t) for t in forest.trees],
    }


def forest_from_dict(doc: dict) -> Forest:
    if doc.get("format") != FOREST_FORMAT:
        raise ValueError("not a forest document")
    if doc.get("version") != FOREST_VERSION:
        raise ValueError(f"unsupported forest document version {doc.get('version')!r}")
    cfg = ForestConfig(
        n_trees=doc["config"]["n_trees"],
        mtry=doc["config"]["mtry"],
        max_depth=doc["config"]["max_depth"],
        min_samples_split=doc["config"]["min_samples_split"],
        seed=Seed(doc["config"]["seed_root"], doc["config"]["seed_index"]),
    )
    return Forest(
        trees=[_node_from_dict(t) for t in doc["trees"]],
        config=cfg,
        importances=np.array(doc["importances"], dtype=np.float64),
        feature_names=tuple(doc["feature_names"]),
    )


def save_forest(forest: Forest, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(forest_to_dict(forest), fh, indent=1)
        fh.write("\n")


def load_forest(path) -> Forest:
    with open(path, "r", encoding="utf-8") as fh:
        return forest_from_dict(json.load(fh))
