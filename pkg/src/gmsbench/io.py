"""File formats: edge lists, feature matrices, reports, configs, manifests.

All scientific outputs are byte-reproducible for a given config; wall-clock
timestamps appear only in the run manifest. Reals are written as decimals
with 17 significant digits so 64-bit floats round-trip exactly.
"""
from __future__ import annotations

import csv
import datetime
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__, kernels
from .features import FEATURE_NAMES
from .forest import Dataset, ER, SBM, LABELS
from .experiments import (ER_P_MILLS, GRID_STEP_MILLS, ImportanceReport, SweepReport,
                          parse_subset, to_mills)
from .graph import Graph, graph_from_edges

META_COLUMNS = ("model", "n", "p", "p_in", "p_out", "rewire_fraction", "seed")
FEATURE_CSV_HEADER = tuple(FEATURE_NAMES) + META_COLUMNS


def fmt_real(x: float) -> str:
    return format(float(x), ".17g")


# --- edge lists --------------------------------------------------------------

class EdgeListParseError(ValueError):
    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


def write_edge_list(g: Graph, path) -> None:
    """Canonical text form: "n <count>" then one "u v" line per edge, u < v,
    ascending. Writing, reading and re-writing is a fixed point."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"n {g.n}\n")
        for u, v in g.edge_array:
            fh.write(f"{u} {v}\n")


def read_edge_list(path) -> Graph:
    n = None
    edges = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if n is None:
                if len(parts) != 2 or parts[0] != "n":
                    raise EdgeListParseError(path, line_no, "expected header line 'n <count>'")
                try:
                    n = int(parts[1])
                except ValueError:
                    raise EdgeListParseError(path, line_no, f"bad vertex count {parts[1]!r}") from None
                continue
            if len(parts) != 2:
                raise EdgeListParseError(path, line_no, "expected edge line 'u v'")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListParseError(path, line_no, f"bad edge line {text!r}") from None
            edges.append((u, v))
    if n is None:
        raise EdgeListParseError(path, 0, "missing 'n <count>' header")
    try:
        return graph_from_edges(n, edges)
    except ValueError as exc:
        raise EdgeListParseError(path, 0, str(exc)) from None


# --- feature matrices --------------------------------------------------------

@dataclass
class FeatureRow:
    vector: np.ndarray
    model: str = ""              # "er", "sbm", or "" when unknown
    n: Optional[int] = None
    p: Optional[float] = None
    p_in: Optional[float] = None
    p_out: Optional[float] = None
    rewire_fraction: float = 0.0
    seed: Optional[int] = None


def write_feature_csv(rows: Sequence[FeatureRow], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(FEATURE_CSV_HEADER)
        for row in rows:
            rec = [fmt_real(v) for v in row.vector]
            rec.append(row.model)
            rec.append("" if row.n is None else str(row.n))
            rec.append("" if row.p is None else fmt_real(row.p))
            rec.append("" if row.p_in is None else fmt_real(row.p_in))
            rec.append("" if row.p_out is None else fmt_real(row.p_out))
            rec.append(fmt_real(row.rewire_fraction))
            rec.append("" if row.seed is None else str(row.seed))
            writer.writerow(rec)


def read_feature_csv(path) -> list[FeatureRow]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header) != FEATURE_CSV_HEADER:
            raise ValueError(f"{path}: unexpected feature CSV header")
        rows = []
        nf = len(FEATURE_NAMES)
        for rec in reader:
            if len(rec) != len(FEATURE_CSV_HEADER):
                raise ValueError(f"{path}: row with {len(rec)} columns, expected {len(FEATURE_CSV_HEADER)}")
            vec = np.array([float(v) for v in rec[:nf]], dtype=np.float64)
            model, n, p, p_in, p_out, rw, seed = rec[nf:]
            rows.append(FeatureRow(
                vector=vec, model=model,
                n=int(n) if n else None,
                p=float(p) if p else None,
                p_in=float(p_in) if p_in else None,
                p_out=float(p_out) if p_out else None,
                rewire_fraction=float(rw) if rw else 0.0,
                seed=int(seed) if seed else None))
        return rows


def dataset_from_feature_rows(rows: Sequence[FeatureRow]) -> Dataset:
    """Build a labeled Dataset; every row must carry model er or sbm."""
    labels = []
    for i, row in enumerate(rows):
        if row.model not in LABELS:
            raise ValueError(f"row {i} has no model label; cannot build a labeled dataset")
        labels.append(ER if row.model == "er" else SBM)
    if not rows:
        raise ValueError("no rows to build a dataset from")
    X = np.stack([r.vector for r in rows])
    metas = [{"model": r.model, "n": r.n, "p": r.p, "p_in": r.p_in, "p_out": r.p_out,
              "rewire_fraction": r.rewire_fraction, "seed": r.seed} for r in rows]
    return Dataset(X, np.array(labels, dtype=np.int8), FEATURE_NAMES, metas)


# --- experiment config -------------------------------------------------------

class ConfigError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.field_path = path


@dataclass
class ExperimentConfig:
    density: float
    n: int = 1000
    deltas: Optional[list[float]] = None  # None -> full grid at this density
    instances_per_model: int = 100
    train_per_model: int = 66
    test_per_model: int = 34
    root_seed: int = 1729
    n_trees: int = 100
    mtry: Optional[int] = None
    max_depth: Optional[int] = None
    min_samples_split: int = 2
    subsets: list[str] = field(default_factory=lambda: ["all26", "top15", "top10", "critical"])
    rewire_fractions: list[float] = field(default_factory=lambda: [0.0, 0.1, 0.2])
    aggregation_epsilons: list[float] = field(default_factory=lambda: [0.02, 0.04])
    size_transfer_n_test: int = 1100
    jobs: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "density": self.density,
            "n": self.n,
            "deltas": self.deltas,
            "instances_per_model": self.instances_per_model,
            "train_per_model": self.train_per_model,
            "test_per_model": self.test_per_model,
            "root_seed": self.root_seed,
            "forest": {
                "n_trees": self.n_trees,
                "mtry": self.mtry,
                "max_depth": self.max_depth,
                "min_samples_split": self.min_samples_split,
            },
            "subsets": self.subsets,
            "rewire_fractions": self.rewire_fractions,
            "aggregation_epsilons": self.aggregation_epsilons,
            "size_transfer_n_test": self.size_transfer_n_test,
            "jobs": self.jobs,
        }

    def config_hash(self) -> str:
        canon = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise ConfigError(path, message)


def config_from_dict(doc: dict) -> ExperimentConfig:
    _expect(isinstance(doc, dict), "$", "config must be a JSON object")
    known = {"density", "n", "deltas", "instances_per_model", "train_per_model",
             "test_per_model", "root_seed", "forest", "subsets", "rewire_fractions",
             "aggregation_epsilons", "size_transfer_n_test", "jobs"}
    for key in doc:
        _expect(key in known, key, "unknown config field")
    _expect("density" in doc, "density", "required field missing")
    cfg = ExperimentConfig(density=float(doc["density"]))
    try:
        mills = to_mills(cfg.density)
    except ValueError as exc:
        raise ConfigError("density", str(exc)) from None
    _expect(mills in ER_P_MILLS, "density", f"{cfg.density} is not on the ER grid")
    if "n" in doc:
        cfg.n = int(doc["n"])
        _expect(cfg.n >= 3, "n", "graph size must be at least 3")
    if doc.get("deltas") is not None:
        _expect(isinstance(doc["deltas"], list) and doc["deltas"], "deltas", "must be a non-empty list")
        cfg.deltas = []
        for i, d in enumerate(doc["deltas"]):
            try:
                dm = to_mills(float(d))
            except ValueError as exc:
                raise ConfigError(f"deltas[{i}]", str(exc)) from None
            _expect(dm > 0 and dm % (2 * GRID_STEP_MILLS) == 0, f"deltas[{i}]",
                    f"{d} is not a positive multiple of 0.01")
            cfg.deltas.append(dm / 1000)
    for name in ("instances_per_model", "train_per_model", "test_per_model"):
        if name in doc:
            setattr(cfg, name, int(doc[name]))
    _expect(cfg.train_per_model >= 1 and cfg.test_per_model >= 1,
            "train_per_model", "split sizes must be positive")
    _expect(cfg.train_per_model + cfg.test_per_model == cfg.instances_per_model,
            "instances_per_model", "train + test must equal instances per model")
    if "root_seed" in doc:
        cfg.root_seed = int(doc["root_seed"])
        _expect(0 <= cfg.root_seed < 2**64, "root_seed", "must be an unsigned 64-bit integer")
    forest = doc.get("forest", {})
    _expect(isinstance(forest, dict), "forest", "must be an object")
    for key in forest:
        _expect(key in {"n_trees", "mtry", "max_depth", "min_samples_split"},
                f"forest.{key}", "unknown forest field")
    if "n_trees" in forest:
        cfg.n_trees = int(forest["n_trees"])
        _expect(cfg.n_trees >= 1, "forest.n_trees", "must be at least 1")
    if forest.get("mtry") is not None:
        cfg.mtry = int(forest["mtry"])
        _expect(cfg.mtry >= 1, "forest.mtry", "must be at least 1")
    if forest.get("max_depth") is not None:
        cfg.max_depth = int(forest["max_depth"])
        _expect(cfg.max_depth >= 1, "forest.max_depth", "must be at least 1")
    if "min_samples_split" in forest:
        cfg.min_samples_split = int(forest["min_samples_split"])
        _expect(cfg.min_samples_split >= 2, "forest.min_samples_split", "must be at least 2")
    if "subsets" in doc:
        _expect(isinstance(doc["subsets"], list) and doc["subsets"], "subsets", "must be a non-empty list")
        for i, token in enumerate(doc["subsets"]):
            try:
                parse_subset(str(token))
            except ValueError as exc:
                raise ConfigError(f"subsets[{i}]", str(exc)) from None
        cfg.subsets = [str(t) for t in doc["subsets"]]
    if "rewire_fractions" in doc:
        cfg.rewire_fractions = []
        for i, f in enumerate(doc["rewire_fractions"]):
            f = float(f)
            _expect(0.0 <= f <= 1.0, f"rewire_fractions[{i}]", "must lie in [0, 1]")
            cfg.rewire_fractions.append(f)
    if "aggregation_epsilons" in doc:
        cfg.aggregation_epsilons = []
        for i, e in enumerate(doc["aggregation_epsilons"]):
            try:
                em = to_mills(float(e))
            except ValueError as exc:
                raise ConfigError(f"aggregation_epsilons[{i}]", str(exc)) from None
            _expect(em >= 0 and em % GRID_STEP_MILLS == 0, f"aggregation_epsilons[{i}]",
                    f"{e} is not a multiple of the 0.005 grid step")
            cfg.aggregation_epsilons.append(em / 1000)
    if "size_transfer_n_test" in doc:
        cfg.size_transfer_n_test = int(doc["size_transfer_n_test"])
        _expect(cfg.size_transfer_n_test >= 3, "size_transfer_n_test", "must be at least 3")
    if doc.get("jobs") is not None:
        cfg.jobs = int(doc["jobs"])
        _expect(cfg.jobs >= 1, "jobs", "must be at least 1")
    return cfg


def load_experiment_config(path) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError("$", f"invalid JSON: {exc}") from None
    return config_from_dict(doc)


# --- reports -----------------------------------------------------------------

SWEEP_CSV_HEADER = ("density", "delta", "p_in", "p_out", "delta_star", "accuracy",
                    "subset", "rewire_fraction", "epsilon", "n_train", "n_test",
                    "root_seed", "config_hash")


def write_sweep_csv(report: SweepReport, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_CSV_HEADER)
        for r in report.rows:
            writer.writerow([
                fmt_real(r.density), fmt_real(r.delta), fmt_real(r.p_in), fmt_real(r.p_out),
                fmt_real(r.delta_star), fmt_real(r.accuracy), r.subset,
                fmt_real(r.rewire_fraction), "" if r.epsilon is None else fmt_real(r.epsilon),
                str(r.n_train), str(r.n_test), str(r.root_seed), r.config_hash])


def write_sweep_json(report: SweepReport, path, figure: str, config: dict) -> None:
    doc = {
        "figure": figure,
        "config_hash": report.config_hash,
        "config": config,
        "rows": [{
            "density": r.density, "delta": r.delta, "p_in": r.p_in, "p_out": r.p_out,
            "delta_star": r.delta_star, "accuracy": r.accuracy, "subset": r.subset,
            "rewire_fraction": r.rewire_fraction, "epsilon": r.epsilon,
            "n_train": r.n_train, "n_test": r.n_test, "root_seed": r.root_seed,
        } for r in report.rows],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def write_plot_data(report: SweepReport, path, subset: str,
                    rewire_fraction: Optional[float] = None,
                    epsilon: Optional[float] = None,
                    n_test: Optional[int] = None) -> None:
    """(delta, accuracy, delta_star) columns for one curve."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("delta", "accuracy", "delta_star"))
        for r in report.rows:
            if r.subset != subset:
                continue
            if rewire_fraction is not None and r.rewire_fraction != rewire_fraction:
                continue
            if epsilon is not None and r.epsilon != epsilon:
                continue
            if n_test is not None and r.n_test != n_test:
                continue
            writer.writerow((fmt_real(r.delta), fmt_real(r.accuracy), fmt_real(r.delta_star)))


def write_importance_csv(report: ImportanceReport, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("density", "delta", "p_in", "p_out", "rank", "feature", "importance"))
        for row in report.rows:
            for rank, (name, imp) in enumerate(row.ranking, start=1):
                writer.writerow([fmt_real(row.density), fmt_real(row.delta),
                                 fmt_real(row.p_in), fmt_real(row.p_out),
                                 str(rank), name, fmt_real(imp)])


def write_importance_json(report: ImportanceReport, path, config: dict) -> None:
    doc = {
        "figure": "importance",
        "config_hash": report.config_hash,
        "config": config,
        "points": [{
            "density": row.density, "delta": row.delta,
            "p_in": row.p_in, "p_out": row.p_out,
            "concentration_k90": row.concentration_k90,
            "ranking": [{"feature": name, "importance": imp} for name, imp in row.ranking],
        } for row in report.rows],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def build_manifest(figure: str, config: ExperimentConfig, jobs: int,
                   started_at: datetime.datetime, finished_at: datetime.datetime) -> dict:
    return {
        "tool": "gmsbench",
        "version": __version__,
        "figure": figure,
        "config_hash": config.config_hash(),
        "root_seed": config.root_seed,
        "backend": kernels.BACKEND,
        "jobs": jobs,
        "config": config.to_dict(),
        "started_at": started_at.isoformat(),
        "finished_at": finished_at.isoformat(),
    }


def write_json(doc: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def ensure_dir(path) -> Path:
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p
