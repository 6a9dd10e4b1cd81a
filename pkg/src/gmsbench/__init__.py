"""gmsbench: graph model selection benchmark.

Generates Erdos-Renyi and stochastic block model graphs across a parameter
grid, embeds each graph into a 26-dimensional topological feature space,
trains a from-scratch random forest to tell the two models apart, and
reproduces the discrimination-power experiments against the theoretical
detectability threshold.
"""

__version__ = "0.1.0"

from .graph import Graph, connected_components, graph_density, graph_from_edges  # noqa: E402
from .generators import (ErParams, SbmParams, Seed, expected_density, generate_er,  # noqa: E402
                         generate_sbm, rewire_uniform)
from .features import (CRITICAL_FEATURES, FEATURE_NAMES, FourStats, featurize,  # noqa: E402
                       summarize)
from .forest import (Dataset, Forest, ForestConfig, Sample, TreeNode,  # noqa: E402
                     evaluate_accuracy, fit_forest, fit_tree, gini,
                     load_forest, predict_proba, save_forest, top_k_features)
from .experiments import (ALL_FEATURES, CRITICAL_SUBSET, EnsembleSpec, FeatureStore,  # noqa: E402
                          GridPoint, delta_star, grid_points, run_aggregation_experiment,
                          run_delta_sweep, run_importance_report, run_point,
                          run_rewire_experiment, run_size_transfer, top_subset)

__all__ = [
    "Graph", "connected_components", "graph_density", "graph_from_edges",
    "ErParams", "SbmParams", "Seed", "expected_density", "generate_er",
    "generate_sbm", "rewire_uniform",
    "CRITICAL_FEATURES", "FEATURE_NAMES", "FourStats", "featurize", "summarize",
    "Dataset", "Forest", "ForestConfig", "Sample", "TreeNode",
    "evaluate_accuracy", "fit_forest", "fit_tree", "gini",
    "load_forest", "predict_proba", "save_forest", "top_k_features",
    "ALL_FEATURES", "CRITICAL_SUBSET", "EnsembleSpec", "FeatureStore",
    "GridPoint", "delta_star", "grid_points", "run_aggregation_experiment",
    "run_delta_sweep", "run_importance_report", "run_point",
    "run_rewire_experiment", "run_size_transfer", "top_subset",
]
