"""Command-line interface: generate | featurize | train | evaluate | experiment.

Exit codes: 0 success, 1 runtime failure, 2 usage/config error. All
subcommands honor --seed and --jobs; outputs are independent of --jobs.
"""
from __future__ import annotations

import argparse
import datetime
import json
import os
import shutil
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__, io
from .experiments import (ALL_FEATURES, EnsembleSpec, FeatureStore, InstanceKey,
                          build_instance, compute_feature_row, instance_seed,
                          parse_subset, run_aggregation_experiment, run_delta_sweep,
                          run_importance_report, run_rewire_experiment,
                          run_size_transfer, to_mills)
from .features import featurize
from .forest import ForestConfig, evaluate_accuracy, fit_forest, load_forest, predict_proba, save_forest
from .generators import Seed

FIGURES = ("sweep", "importance", "topk", "rewire", "aggregate", "size")


DEFAULT_SEED = 1729


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help=f"root seed (u64, default {DEFAULT_SEED})")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (default: cpu count)")
    parser.add_argument("--out", default=".", help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gmsbench",
                                     description="ER / stochastic-block-model discrimination benchmark")
    parser.add_argument("--version", action="version", version=f"gmsbench {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write seeded graph instances as edge lists")
    gen.add_argument("model", choices=("er", "sbm"))
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, help="ER edge probability")
    gen.add_argument("--p-in", type=float, dest="p_in", help="SBM within-block probability")
    gen.add_argument("--p-out", type=float, dest="p_out", help="SBM cross-block probability")
    gen.add_argument("--k", type=int, default=2, help="SBM block count")
    gen.add_argument("--count", type=int, default=1)
    _add_common(gen)

    feat = sub.add_parser("featurize", help="embed graphs into the 26-feature space")
    feat.add_argument("inputs", nargs="*", help="edge-list files")
    feat.add_argument("--spec", help="JSON generation spec instead of files")
    feat.add_argument("--label", choices=("er", "sbm"), help="label to attach to file inputs")
    feat.add_argument("--name", default="features.csv", help="output CSV filename")
    _add_common(feat)

    tr = sub.add_parser("train", help="fit a random forest from a feature CSV")
    tr.add_argument("--features", required=True, help="feature CSV with model labels")
    tr.add_argument("--trees", type=int, default=100)
    tr.add_argument("--mtry", type=int, default=None)
    tr.add_argument("--max-depth", type=int, default=None, dest="max_depth")
    tr.add_argument("--min-split", type=int, default=2, dest="min_split")
    tr.add_argument("--name", default="forest.json", help="output forest filename")
    _add_common(tr)

    ev = sub.add_parser("evaluate", help="evaluate a saved forest on a feature CSV")
    ev.add_argument("--forest", required=True)
    ev.add_argument("--features", required=True)
    _add_common(ev)

    ex = sub.add_parser("experiment", help="run one figure-family experiment")
    ex.add_argument("--config", required=True, help="experiment config JSON")
    ex.add_argument("--figure", required=True, choices=FIGURES)
    _add_common(ex)
    return parser


# --- generate ----------------------------------------------------------------

def _instance_keys(args) -> list[InstanceKey]:
    seed = DEFAULT_SEED if args.seed is None else args.seed
    if args.model == "er":
        if args.p is None:
            raise ValueError("er model requires --p")
        pm = to_mills(args.p)
        return [InstanceKey("er", args.n, pm, pm, 2, i, seed) for i in range(args.count)]
    if args.p_in is None or args.p_out is None:
        raise ValueError("sbm model requires --p-in and --p-out")
    return [InstanceKey("sbm", args.n, to_mills(args.p_in), to_mills(args.p_out),
                        args.k, i, seed) for i in range(args.count)]


def _instance_filename(key: InstanceKey) -> str:
    if key.model == "er":
        return f"er_n{key.n}_p{key.pin_mills / 1000:g}_{key.index:04d}.edges"
    return (f"sbm_n{key.n}_pin{key.pin_mills / 1000:g}"
            f"_pout{key.pout_mills / 1000:g}_{key.index:04d}.edges")


def cmd_generate(args) -> int:
    out = io.ensure_dir(args.out)
    for key in _instance_keys(args):
        io.write_edge_list(build_instance(key), out / _instance_filename(key))
    return 0


# --- featurize ---------------------------------------------------------------

def _featurize_file(task: tuple[str, str]) -> io.FeatureRow:
    path, label = task
    g = io.read_edge_list(path)
    return io.FeatureRow(vector=featurize(g), model=label, n=g.n)


def _spec_entries(doc) -> list[dict]:
    if isinstance(doc, dict):
        return [doc]
    if isinstance(doc, list):
        return list(doc)
    raise ValueError("generation spec must be a JSON object or list of objects")


def cmd_featurize(args) -> int:
    out = io.ensure_dir(args.out)
    jobs = args.jobs or os.cpu_count() or 1
    rows: list[io.FeatureRow] = []
    if args.spec:
        with open(args.spec, "r", encoding="utf-8") as fh:
            entries = _spec_entries(json.load(fh))
        keys: list[InstanceKey] = []
        for entry in entries:
            model = entry.get("model")
            n = int(entry.get("n", 0))
            count = int(entry.get("count", 1))
            seed = int(entry.get("seed", DEFAULT_SEED if args.seed is None else args.seed))
            rw = to_mills(float(entry.get("rewire_fraction", 0.0)))
            if model == "er":
                pm = to_mills(float(entry["p"]))
                keys += [InstanceKey("er", n, pm, pm, 2, i, seed, rw) for i in range(count)]
            elif model == "sbm":
                keys += [InstanceKey("sbm", n, to_mills(float(entry["p_in"])),
                                     to_mills(float(entry["p_out"])), int(entry.get("k", 2)),
                                     i, seed, rw) for i in range(count)]
            else:
                raise ValueError(f"generation spec model must be er or sbm, got {model!r}")
        store = FeatureStore()
        store.ensure(keys, jobs=jobs)
        for key in keys:
            vec = store.matrix([key])[0]
            rows.append(io.FeatureRow(
                vector=vec, model=key.model, n=key.n,
                p=key.pin_mills / 1000 if key.model == "er" else None,
                p_in=key.pin_mills / 1000 if key.model == "sbm" else None,
                p_out=key.pout_mills / 1000 if key.model == "sbm" else None,
                rewire_fraction=key.rewire_mills / 1000,
                seed=instance_seed(key).root))
    if args.inputs:
        tasks = [(p, args.label or "") for p in args.inputs]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                rows += list(pool.map(_featurize_file, tasks))
        else:
            rows += [_featurize_file(t) for t in tasks]
    io.write_feature_csv(rows, out / args.name)
    return 0


# --- train / evaluate --------------------------------------------------------

def cmd_train(args) -> int:
    rows = io.read_feature_csv(args.features)
    ds = io.dataset_from_feature_rows(rows)
    config = ForestConfig(n_trees=args.trees, mtry=args.mtry, max_depth=args.max_depth,
                          min_samples_split=args.min_split,
                          seed=Seed(DEFAULT_SEED if args.seed is None else args.seed).derive("train"))
    forest = fit_forest(ds, config)
    out = io.ensure_dir(args.out)
    save_forest(forest, out / args.name)
    print(f"trained {config.n_trees} trees on {len(ds)} rows -> {out / args.name}")
    return 0


def cmd_evaluate(args) -> int:
    forest = load_forest(args.forest)
    rows = io.read_feature_csv(args.features)
    ds = io.dataset_from_feature_rows(rows)
    if ds.n_features != forest.n_features:
        raise ValueError(f"forest expects {forest.n_features} features, CSV has {ds.n_features}")
    accuracy = evaluate_accuracy(forest, ds)
    out = io.ensure_dir(args.out)
    probs = [predict_proba(forest, ds.X[i]) for i in range(len(ds))]
    with open(out / "predictions.csv", "w", encoding="utf-8", newline="") as fh:
        fh.write("row,true,predicted,p_er,p_sbm\n")
        for i, p in enumerate(probs):
            pred = "sbm" if p[1] > p[0] else "er"
            true = "er" if ds.y[i] == 0 else "sbm"
            fh.write(f"{i},{true},{pred},{io.fmt_real(p[0])},{io.fmt_real(p[1])}\n")
    io.write_json({"accuracy": accuracy, "n_rows": len(ds)}, out / "evaluation.json")
    print(f"accuracy {accuracy:.4f} on {len(ds)} rows")
    return 0


# --- experiment --------------------------------------------------------------

def _run_figure(figure: str, cfg: io.ExperimentConfig, jobs: int, stage: Path) -> None:
    spec = EnsembleSpec(root_seed=cfg.root_seed, instances_per_model=cfg.instances_per_model,
                        train_per_model=cfg.train_per_model, test_per_model=cfg.test_per_model,
                        jobs=jobs)
    forest_config = ForestConfig(n_trees=cfg.n_trees, mtry=cfg.mtry, max_depth=cfg.max_depth,
                                 min_samples_split=cfg.min_samples_split)
    subsets = [parse_subset(t) for t in cfg.subsets]
    store = FeatureStore()
    chash = cfg.config_hash()
    common = dict(deltas=cfg.deltas, n=cfg.n, store=store, config_hash=chash)

    if figure == "sweep":
        report = run_delta_sweep(cfg.density, spec, forest_config, (ALL_FEATURES,), **common)
        curves = [(ALL_FEATURES.id, {})]
    elif figure == "topk":
        report = run_delta_sweep(cfg.density, spec, forest_config, subsets, **common)
        curves = [(s.id, {}) for s in subsets]
    elif figure == "rewire":
        report = run_rewire_experiment(cfg.density, spec, forest_config,
                                       cfg.rewire_fractions, subsets, **common)
        curves = [(s.id, {"rewire_fraction": f}) for s in subsets for f in cfg.rewire_fractions]
    elif figure == "aggregate":
        report = run_aggregation_experiment(cfg.density, spec, forest_config,
                                            cfg.aggregation_epsilons, subsets, **common)
        curves = [(s.id, {"epsilon": e}) for s in subsets for e in cfg.aggregation_epsilons]
    elif figure == "size":
        report = run_size_transfer(cfg.density, spec, forest_config,
                                   cfg.size_transfer_n_test, subsets, **common)
        curves = [(s.id, {"n_test": cfg.size_transfer_n_test}) for s in subsets]
    elif figure == "importance":
        imp_report = run_importance_report(cfg.density, spec, forest_config, **common)
        io.write_importance_csv(imp_report, stage / "report_importance.csv")
        io.write_importance_json(imp_report, stage / "report_importance.json", cfg.to_dict())
        return
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown figure {figure!r}")

    io.write_sweep_csv(report, stage / f"report_{figure}.csv")
    io.write_sweep_json(report, stage / f"report_{figure}.json", figure, cfg.to_dict())
    for subset_id, cond in curves:
        suffix = ""
        if "rewire_fraction" in cond:
            suffix = f"_f{to_mills(cond['rewire_fraction']):03d}"
        elif "epsilon" in cond:
            suffix = f"_e{to_mills(cond['epsilon']):03d}"
        elif "n_test" in cond:
            suffix = f"_n{cond['n_test']}"
        io.write_plot_data(report, stage / f"plot_{figure}_{subset_id}{suffix}.csv",
                           subset_id, **cond)


def cmd_experiment(args) -> int:
    cfg = io.load_experiment_config(args.config)
    if args.seed is not None:
        cfg.root_seed = args.seed
    jobs = args.jobs or cfg.jobs or os.cpu_count() or 1
    out = io.ensure_dir(args.out)
    started = datetime.datetime.now(datetime.timezone.utc)
    stage = Path(tempfile.mkdtemp(prefix=".stage-", dir=out))
    try:
        _run_figure(args.figure, cfg, jobs, stage)
    except BaseException:
        shutil.rmtree(stage, ignore_errors=True)
        raise
    finished = datetime.datetime.now(datetime.timezone.utc)
    io.write_json(io.build_manifest(args.figure, cfg, jobs, started, finished),
                  stage / f"manifest_{args.figure}.json")
    for item in sorted(stage.iterdir()):
        os.replace(item, out / item.name)
    stage.rmdir()
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "generate": cmd_generate,
        "featurize": cmd_featurize,
        "train": cmd_train,
        "evaluate": cmd_evaluate,
        "experiment": cmd_experiment,
    }
    try:
        return handlers[args.command](args)
    except io.ConfigError as exc:
        print(f"gmsbench: config error at {exc.field_path}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"gmsbench: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
