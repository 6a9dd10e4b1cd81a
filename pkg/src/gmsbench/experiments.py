"""Parameter-grid experiments: delta sweeps against the detectability
threshold, importance reports, feature-subset retraining, rewiring noise,
parameter aggregation, and size transfer.

Protocol per grid point: 100 instances of each model (66 train / 34 test),
matched density (ER p equals (p_in+p_out)/2 exactly on the grid), one
classifier per point. Probabilities live on a 0.005 grid and are carried as
integer thousandths ("mills") so grid identity is exact.
"""
from __future__ import annotations

import hashlib
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import features
from .forest import Dataset, ForestConfig, Forest, ER, SBM, evaluate_accuracy, fit_forest, top_k_features
from .generators import ErParams, SbmParams, Seed, generate_er, generate_sbm, rewire_uniform
from .graph import Graph

GRID_STEP_MILLS = 5
ER_P_MILLS = tuple(range(10, 95, GRID_STEP_MILLS))      # .01, .015, ..., .09
SBM_P_IN_MILLS = tuple(range(10, 195, GRID_STEP_MILLS))  # .01, ..., .19
SBM_P_OUT_MILLS = tuple(range(10, 95, GRID_STEP_MILLS))  # .01, ..., .09


def to_mills(p: float) -> int:
    """Exact integer thousandths for an on-grid probability."""
    mills = round(p * 1000)
    if abs(mills - p * 1000) > 1e-6:
        raise ValueError(f"probability {p} is not a multiple of 0.001")
    return mills


def delta_star(p_in: float, p_out: float, n: int) -> float:
    """Detectability threshold sqrt(2(p_in + p_out)/n) below which the block
    model cannot be told apart from the equal-density ER model."""
    if n < 1:
        raise ValueError("n must be positive")
    s = p_in + p_out
    if s < 0:
        raise ValueError("p_in + p_out must be non-negative")
    return math.sqrt(2.0 * s / n)


@dataclass(frozen=True)
class GridPoint:
    """One matched-density pairing of an ER p with an SBM (p_in, p_out)."""

    n: int
    pin_mills: int
    pout_mills: int
    k: int = 2

    def __post_init__(self):
        if self.pin_mills < self.pout_mills:
            raise ValueError("p_in must be at least p_out")
        if (self.pin_mills + self.pout_mills) % 2 != 0:
            raise ValueError("p_in + p_out must give an exact density bucket")

    @property
    def density_mills(self) -> int:
        return (self.pin_mills + self.pout_mills) // 2

    @property
    def p_in(self) -> float:
        return self.pin_mills / 1000

    @property
    def p_out(self) -> float:
        return self.pout_mills / 1000

    @property
    def density(self) -> float:
        return self.density_mills / 1000

    @property
    def delta(self) -> float:
        return (self.pin_mills - self.pout_mills) / 1000

    @property
    def delta_mills(self) -> int:
        return self.pin_mills - self.pout_mills

    def delta_star(self) -> float:
        return delta_star(self.p_in, self.p_out, self.n)

    def er_params(self) -> ErParams:
        return ErParams(self.n, self.density)

    def sbm_params(self) -> SbmParams:
        return SbmParams(self.n, self.p_in, self.p_out, self.k)


def grid_points(density: float, n: int = 1000, deltas: Optional[Sequence[float]] = None) -> list[GridPoint]:
    """All grid (p_in, p_out) pairs of the given density with p_in > p_out.

    ``deltas`` restricts to the given gaps (each must exist on the grid).
    Points are ordered by increasing delta.
    """
    d_mills = to_mills(density)
    if d_mills not in ER_P_MILLS:
        raise ValueError(f"density {density} is not on the ER parameter grid")
    points = []
    for pin in SBM_P_IN_MILLS:
        pout = 2 * d_mills - pin
        if pin <= pout:
            continue
        if pout < SBM_P_OUT_MILLS[0] or pout > SBM_P_OUT_MILLS[-1]:
            continue
        points.append(GridPoint(n, pin, pout))
    if deltas is not None:
        wanted = [to_mills(d) for d in deltas]
        by_delta = {p.delta_mills: p for p in points}
        missing = [dm for dm in wanted if dm not in by_delta]
        if missing:
            raise ValueError(f"deltas {[dm / 1000 for dm in missing]} not on the grid for density {density}")
        points = [by_delta[dm] for dm in sorted(wanted)]
    return points


@dataclass(frozen=True)
class EnsembleSpec:
    """Per-point ensemble protocol: instance counts, seeds, noise, subset."""

    root_seed: int
    instances_per_model: int = 100
    train_per_model: int = 66
    test_per_model: int = 34
    rewire_fraction: float = 0.0
    jobs: Optional[int] = None

    def __post_init__(self):
        if self.train_per_model < 1 or self.test_per_model < 1:
            raise ValueError("train and test sizes must be positive")
        if self.train_per_model + self.test_per_model != self.instances_per_model:
            raise ValueError("train + test must equal instances per model")
        if not (0.0 <= self.rewire_fraction <= 1.0):
            raise ValueError("rewire fraction must lie in [0, 1]")

    def train_indices(self) -> range:
        return range(0, self.train_per_model)

    def test_indices(self) -> range:
        return range(self.train_per_model, self.instances_per_model)


@dataclass(frozen=True)
class SubsetSpec:
    """Feature-subset selector: all features, per-point top-k, or a named list."""

    kind: str  # "all" | "top" | "named"
    k: int = 0
    name: str = ""
    indices: tuple[int, ...] = ()

    @property
    def id(self) -> str:
        if self.kind == "all":
            return f"all{features.NUM_FEATURES}"
        if self.kind == "top":
            return f"top{self.k}"
        return self.name

    def resolve(self, importances: np.ndarray) -> list[int]:
        if self.kind == "all":
            return list(range(len(importances)))
        if self.kind == "top":
            return top_k_features(importances, self.k)
        return list(self.indices)


ALL_FEATURES = SubsetSpec("all")
CRITICAL_SUBSET = SubsetSpec("named", name="critical", indices=features.CRITICAL_FEATURES)


def top_subset(k: int) -> SubsetSpec:
    return SubsetSpec("top", k=k)


def parse_subset(token: str) -> SubsetSpec:
    if token == f"all{features.NUM_FEATURES}" or token == "all":
        return ALL_FEATURES
    if token == "critical":
        return CRITICAL_SUBSET
    if token.startswith("top"):
        return top_subset(int(token[3:]))
    raise ValueError(f"unknown feature subset {token!r}")


# --- instance descriptors and the feature store ----------------------------

@dataclass(frozen=True)
class InstanceKey:
    """Everything needed to regenerate and featurize one graph instance.

    For ER instances pin_mills == pout_mills == the edge probability. The
    rewire fields are zero for pure instances; test-time noise sets them.
    """

    model: str  # "er" | "sbm"
    n: int
    pin_mills: int
    pout_mills: int
    k: int
    index: int
    root_seed: int
    rewire_mills: int = 0


def instance_seed(key: InstanceKey) -> Seed:
    # the instance index is folded into the derived root so one integer fully
    # identifies the stream (it is what the feature CSV's seed column carries)
    return Seed(key.root_seed).derive(
        key.model, key.n, key.pin_mills, key.pout_mills, key.k, key.index)


def _rewire_seed(key: InstanceKey) -> Seed:
    return Seed(key.root_seed).derive(
        "rewire", key.rewire_mills, key.model, key.n,
        key.pin_mills, key.pout_mills, key.k, key.index)


def build_instance(key: InstanceKey) -> Graph:
    seed = instance_seed(key)
    if key.model == "er":
        g = generate_er(ErParams(key.n, key.pin_mills / 1000), seed)
    elif key.model == "sbm":
        g = generate_sbm(SbmParams(key.n, key.pin_mills / 1000, key.pout_mills / 1000, key.k), seed)
    else:
        raise ValueError(f"unknown model {key.model!r}")
    if key.rewire_mills:
        g = rewire_uniform(g, key.rewire_mills / 1000, _rewire_seed(key))
    return g


def compute_feature_row(key: InstanceKey) -> np.ndarray:
    return features.featurize(build_instance(key))


class FeatureStore:
    """In-process cache of feature rows keyed by InstanceKey.

    Missing rows are computed in parallel with a process pool; results are
    keyed, so reports are identical for any worker count.
    """

    def __init__(self):
        self._rows: dict[InstanceKey, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def ensure(self, keys: Sequence[InstanceKey], jobs: Optional[int] = None) -> None:
        missing = list(dict.fromkeys(k for k in keys if k not in self._rows))
        if not missing:
            return
        jobs = jobs or os.cpu_count() or 1
        if jobs > 1 and len(missing) > 1:
            chunk = max(1, len(missing) // (jobs * 4))
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for key, row in zip(missing, pool.map(compute_feature_row, missing, chunksize=chunk)):
                    self._rows[key] = row
        else:
            for key in missing:
                self._rows[key] = compute_feature_row(key)

    def matrix(self, keys: Sequence[InstanceKey]) -> np.ndarray:
        return np.stack([self._rows[k] for k in keys])


def er_key(point: GridPoint, index: int, root_seed: int, n: Optional[int] = None,
           rewire_mills: int = 0) -> InstanceKey:
    return InstanceKey("er", n or point.n, point.density_mills, point.density_mills,
                       point.k, index, root_seed, rewire_mills)


def sbm_key(point: GridPoint, index: int, root_seed: int, n: Optional[int] = None,
            rewire_mills: int = 0) -> InstanceKey:
    return InstanceKey("sbm", n or point.n, point.pin_mills, point.pout_mills,
                       point.k, index, root_seed, rewire_mills)


# --- per-point fit/evaluate -------------------------------------------------

@dataclass
class PointResult:
    point: GridPoint
    accuracies: dict[str, float]           # subset id -> test accuracy
    importances: np.ndarray                # from the all-features forest
    subsets: dict[str, tuple[int, ...]]    # subset id -> resolved indices
    forests: dict[str, Forest]


def _point_forest_seed(spec: EnsembleSpec, point: GridPoint, subset_id: str) -> Seed:
    # Shared by the sweep, rewiring, aggregation and size-transfer paths so
    # the no-noise conditions reproduce the plain sweep bit-for-bit.
    return Seed(spec.root_seed).derive("forest", point.n, point.pin_mills,
                                       point.pout_mills, subset_id)


def _fit_eval(spec: EnsembleSpec, point: GridPoint, forest_config: ForestConfig,
              train_keys: list[InstanceKey], train_labels: np.ndarray,
              test_keys: list[InstanceKey], test_labels: np.ndarray,
              subsets: Sequence[SubsetSpec], store: FeatureStore) -> PointResult:
    store.ensure(train_keys + test_keys, jobs=spec.jobs)
    train = Dataset(store.matrix(train_keys), train_labels, features.FEATURE_NAMES)
    test = Dataset(store.matrix(test_keys), test_labels, features.FEATURE_NAMES)

    def fit_for(subset_id: str, ds: Dataset) -> Forest:
        cfg = ForestConfig(n_trees=forest_config.n_trees, mtry=forest_config.mtry,
                           max_depth=forest_config.max_depth,
                           min_samples_split=forest_config.min_samples_split,
                           seed=_point_forest_seed(spec, point, subset_id))
        return fit_forest(ds, cfg)

    all_forest = fit_for(ALL_FEATURES.id, train)
    importances = all_forest.importances
    accuracies: dict[str, float] = {}
    resolved: dict[str, tuple[int, ...]] = {}
    forests: dict[str, Forest] = {}
    for sub in subsets:
        idx = sub.resolve(importances)
        resolved[sub.id] = tuple(idx)
        if sub.kind == "all":
            forest = all_forest
            accuracies[sub.id] = evaluate_accuracy(forest, test)
        else:
            forest = fit_for(sub.id, train.project(idx))
            accuracies[sub.id] = evaluate_accuracy(forest, test.project(idx))
        forests[sub.id] = forest
    return PointResult(point, accuracies, importances, resolved, forests)


def run_point(point: GridPoint, spec: EnsembleSpec, forest_config: ForestConfig,
              subsets: Sequence[SubsetSpec] = (ALL_FEATURES,),
              store: Optional[FeatureStore] = None,
              test_n: Optional[int] = None) -> PointResult:
    """Generate the point's ensembles, fit per-subset forests, evaluate.

    Training always uses pure instances at the point's n; ``spec.rewire_fraction``
    corrupts the test instances of both models, and ``test_n`` switches the
    test instances to a different graph size (size-transfer protocol).
    """
    store = store if store is not None else FeatureStore()
    rw = to_mills(spec.rewire_fraction) if spec.rewire_fraction else 0
    train_keys, test_keys = [], []
    for i in spec.train_indices():
        train_keys.append(er_key(point, i, spec.root_seed))
    for i in spec.train_indices():
        train_keys.append(sbm_key(point, i, spec.root_seed))
    for i in spec.test_indices():
        test_keys.append(er_key(point, i, spec.root_seed, n=test_n, rewire_mills=rw))
    for i in spec.test_indices():
        test_keys.append(sbm_key(point, i, spec.root_seed, n=test_n, rewire_mills=rw))
    t = spec.train_per_model
    e = spec.test_per_model
    train_labels = np.array([ER] * t + [SBM] * t, dtype=np.int8)
    test_labels = np.array([ER] * e + [SBM] * e, dtype=np.int8)
    return _fit_eval(spec, point, forest_config, train_keys, train_labels,
                     test_keys, test_labels, subsets, store)


# --- reports ----------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    density: float
    delta: float
    p_in: float
    p_out: float
    delta_star: float
    accuracy: float
    subset: str
    rewire_fraction: float
    epsilon: Optional[float]
    n_train: int
    n_test: int
    root_seed: int
    config_hash: str


@dataclass
class SweepReport:
    rows: list[SweepRow]
    config_hash: str
    point_results: list[PointResult] = field(default_factory=list)

    def accuracies(self, subset: str = ALL_FEATURES.id, rewire_fraction: Optional[float] = None,
                   epsilon: Optional[float] = None) -> dict[float, float]:
        """delta -> accuracy for one curve (subset + optional condition)."""
        out = {}
        for r in self.rows:
            if r.subset != subset:
                continue
            if rewire_fraction is not None and r.rewire_fraction != rewire_fraction:
                continue
            if epsilon is not None and r.epsilon != epsilon:
                continue
            out[r.delta] = r.accuracy
        return out


def _hash_config(payload: dict) -> str:
    canon = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


def _base_config_payload(kind: str, density: float, spec: EnsembleSpec,
                         forest_config: ForestConfig, subsets: Sequence[SubsetSpec],
                         deltas: Optional[Sequence[float]], n: int, **extra) -> dict:
    payload = {
        "experiment": kind,
        "density": density,
        "n": n,
        "root_seed": spec.root_seed,
        "instances_per_model": spec.instances_per_model,
        "train_per_model": spec.train_per_model,
        "test_per_model": spec.test_per_model,
        "forest": {
            "n_trees": forest_config.n_trees,
            "mtry": forest_config.mtry,
            "max_depth": forest_config.max_depth,
            "min_samples_split": forest_config.min_samples_split,
        },
        "subsets": [s.id for s in subsets],
        "deltas": None if deltas is None else [to_mills(d) / 1000 for d in deltas],
    }
    payload.update(extra)
    return payload


def run_delta_sweep(density: float, spec: EnsembleSpec, forest_config: ForestConfig,
                    subsets: Sequence[SubsetSpec] = (ALL_FEATURES,),
                    deltas: Optional[Sequence[float]] = None, n: int = 1000,
                    store: Optional[FeatureStore] = None,
                    config_hash: Optional[str] = None) -> SweepReport:
    """Accuracy per delta at fixed density: the threshold-sweep experiment."""
    store = store if store is not None else FeatureStore()
    points = grid_points(density, n=n, deltas=deltas)
    cfg_hash = config_hash or _hash_config(_base_config_payload(
        "sweep", density, spec, forest_config, subsets, deltas, n,
        rewire_fraction=spec.rewire_fraction))
    rows, results = [], []
    for point in points:
        res = run_point(point, spec, forest_config, subsets, store)
        results.append(res)
        for sub in subsets:
            rows.append(SweepRow(
                density=point.density, delta=point.delta, p_in=point.p_in,
                p_out=point.p_out, delta_star=point.delta_star(),
                accuracy=res.accuracies[sub.id], subset=sub.id,
                rewire_fraction=spec.rewire_fraction, epsilon=None,
                n_train=point.n, n_test=point.n, root_seed=spec.root_seed,
                config_hash=cfg_hash))
    return SweepReport(rows, cfg_hash, results)


@dataclass(frozen=True)
class ImportanceRow:
    density: float
    delta: float
    p_in: float
    p_out: float
    ranking: tuple[tuple[str, float], ...]  # (feature name, importance), descending
    concentration_k90: int


@dataclass
class ImportanceReport:
    rows: list[ImportanceRow]
    config_hash: str


def importance_ranking(importances: np.ndarray) -> list[tuple[str, float]]:
    order = sorted(range(len(importances)), key=lambda i: (-importances[i], i))
    return [(features.FEATURE_NAMES[i], float(importances[i])) for i in order]


def concentration_k(importances: np.ndarray, mass: float = 0.90) -> int:
    """Smallest k whose top-k importances sum to at least ``mass``."""
    vals = sorted((float(v) for v in importances), reverse=True)
    acc = 0.0
    for i, v in enumerate(vals, start=1):
        acc += v
        if acc >= mass:
            return i
    return len(vals)


def run_importance_report(density: float, spec: EnsembleSpec, forest_config: ForestConfig,
                          deltas: Optional[Sequence[float]] = None, n: int = 1000,
                          store: Optional[FeatureStore] = None,
                          config_hash: Optional[str] = None) -> ImportanceReport:
    """Descending feature-importance ranking per grid point, with the
    smallest k capturing 90% of total importance."""
    store = store if store is not None else FeatureStore()
    points = grid_points(density, n=n, deltas=deltas)
    cfg_hash = config_hash or _hash_config(_base_config_payload(
        "importance", density, spec, forest_config, (ALL_FEATURES,), deltas, n))
    rows = []
    for point in points:
        res = run_point(point, spec, forest_config, (ALL_FEATURES,), store)
        rows.append(ImportanceRow(
            density=point.density, delta=point.delta, p_in=point.p_in, p_out=point.p_out,
            ranking=tuple(importance_ranking(res.importances)),
            concentration_k90=concentration_k(res.importances)))
    return ImportanceReport(rows, cfg_hash)


def run_rewire_experiment(density: float, spec: EnsembleSpec, forest_config: ForestConfig,
                          fractions: Sequence[float] = (0.10, 0.20),
                          subsets: Sequence[SubsetSpec] = (ALL_FEATURES,),
                          deltas: Optional[Sequence[float]] = None, n: int = 1000,
                          store: Optional[FeatureStore] = None,
                          config_hash: Optional[str] = None) -> SweepReport:
    """Train on pure instances, test on rewired test instances of both models.

    Fraction 0 reproduces the plain sweep (identical seeds and forests).
    """
    store = store if store is not None else FeatureStore()
    points = grid_points(density, n=n, deltas=deltas)
    cfg_hash = config_hash or _hash_config(_base_config_payload(
        "rewire", density, spec, forest_config, subsets, deltas, n,
        fractions=[to_mills(f) / 1000 for f in fractions]))
    rows, results = [], []
    for point in points:
        for fraction in fractions:
            frac_spec = EnsembleSpec(
                root_seed=spec.root_seed, instances_per_model=spec.instances_per_model,
                train_per_model=spec.train_per_model, test_per_model=spec.test_per_model,
                rewire_fraction=fraction, jobs=spec.jobs)
            res = run_point(point, frac_spec, forest_config, subsets, store)
            results.append(res)
            for sub in subsets:
                rows.append(SweepRow(
                    density=point.density, delta=point.delta, p_in=point.p_in,
                    p_out=point.p_out, delta_star=point.delta_star(),
                    accuracy=res.accuracies[sub.id], subset=sub.id,
                    rewire_fraction=fraction, epsilon=None,
                    n_train=point.n, n_test=point.n, root_seed=spec.root_seed,
                    config_hash=cfg_hash))
    return SweepReport(rows, cfg_hash, results)


def aggregation_pool_points(target: GridPoint, epsilon: float) -> list[GridPoint]:
    """Grid pairs sharing the target's density bucket with |p_in' - p_in| <= eps."""
    eps_mills = to_mills(epsilon)
    if eps_mills % GRID_STEP_MILLS != 0:
        raise ValueError("epsilon must be a multiple of the 0.005 grid step")
    pool = []
    for p in grid_points(target.density, n=target.n):
        if abs(p.pin_mills - target.pin_mills) <= eps_mills:
            pool.append(p)
    return pool


def run_aggregation_experiment(density: float, spec: EnsembleSpec, forest_config: ForestConfig,
                               epsilons: Sequence[float] = (0.02, 0.04),
                               subsets: Sequence[SubsetSpec] = (ALL_FEATURES,),
                               deltas: Optional[Sequence[float]] = None, n: int = 1000,
                               store: Optional[FeatureStore] = None,
                               config_hash: Optional[str] = None) -> SweepReport:
    """Parameter-error tolerance: SBM training rows pool equal-density grid
    pairs within epsilon of the target p_in (all labeled SBM), subsampled
    back to the configured training size; ER training and the test set stay
    the target's own instances.
    """
    store = store if store is not None else FeatureStore()
    targets = grid_points(density, n=n, deltas=deltas)
    cfg_hash = config_hash or _hash_config(_base_config_payload(
        "aggregate", density, spec, forest_config, subsets, deltas, n,
        epsilons=[to_mills(e) / 1000 for e in epsilons]))
    t = spec.train_per_model
    e = spec.test_per_model
    test_labels = np.array([ER] * e + [SBM] * e, dtype=np.int8)
    rows, results = [], []
    for target in targets:
        for eps in epsilons:
            pool_points = aggregation_pool_points(target, eps)
            sbm_pool = [sbm_key(p, i, spec.root_seed)
                        for p in pool_points for i in spec.train_indices()]
            if len(sbm_pool) > t:
                rng = Seed(spec.root_seed).derive(
                    "aggpool", target.pin_mills, target.pout_mills, to_mills(eps)).rng()
                sel = np.sort(rng.choice(len(sbm_pool), size=t, replace=False))
                sbm_pool = [sbm_pool[i] for i in sel]
            train_keys = [er_key(target, i, spec.root_seed) for i in spec.train_indices()]
            train_keys += sbm_pool
            train_labels = np.array([ER] * t + [SBM] * len(sbm_pool), dtype=np.int8)
            test_keys = [er_key(target, i, spec.root_seed) for i in spec.test_indices()]
            test_keys += [sbm_key(target, i, spec.root_seed) for i in spec.test_indices()]
            res = _fit_eval(spec, target, forest_config, train_keys, train_labels,
                            test_keys, test_labels, subsets, store)
            results.append(res)
            for sub in subsets:
                rows.append(SweepRow(
                    density=target.density, delta=target.delta, p_in=target.p_in,
                    p_out=target.p_out, delta_star=target.delta_star(),
                    accuracy=res.accuracies[sub.id], subset=sub.id,
                    rewire_fraction=0.0, epsilon=to_mills(eps) / 1000,
                    n_train=target.n, n_test=target.n, root_seed=spec.root_seed,
                    config_hash=cfg_hash))
    return SweepReport(rows, cfg_hash, results)


def run_size_transfer(density: float, spec: EnsembleSpec, forest_config: ForestConfig,
                      n_test: int, subsets: Sequence[SubsetSpec] = (ALL_FEATURES,),
                      deltas: Optional[Sequence[float]] = None, n: int = 1000,
                      store: Optional[FeatureStore] = None,
                      config_hash: Optional[str] = None) -> SweepReport:
    """Train at size n, test on instances of size n_test with the same
    generative parameters. n_test == n reproduces the plain sweep."""
    if n_test < 3:
        raise ValueError("test graph size must be at least 3")
    store = store if store is not None else FeatureStore()
    points = grid_points(density, n=n, deltas=deltas)
    cfg_hash = config_hash or _hash_config(_base_config_payload(
        "size", density, spec, forest_config, subsets, deltas, n, n_test=n_test))
    rows, results = [], []
    for point in points:
        res = run_point(point, spec, forest_config, subsets, store, test_n=n_test)
        results.append(res)
        for sub in subsets:
            rows.append(SweepRow(
                density=point.density, delta=point.delta, p_in=point.p_in,
                p_out=point.p_out, delta_star=point.delta_star(),
                accuracy=res.accuracies[sub.id], subset=sub.id,
                rewire_fraction=spec.rewire_fraction, epsilon=None,
                n_train=point.n, n_test=n_test, root_seed=spec.root_seed,
                config_hash=cfg_hash))
    return SweepReport(rows, cfg_hash, results)
