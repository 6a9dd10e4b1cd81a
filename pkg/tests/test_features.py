import math

import numpy as np
import pytest

import reference as ref
from gmsbench import kernels
from gmsbench.features import (CRITICAL_FEATURES, DIAMETER_INDEX, FEATURE_NAMES,
                               NUM_FEATURES, RADIUS_INDEX, avg_shortest_path_per_vertex,
                               betweenness_centrality, closeness_centrality,
                               degree_centrality, eccentricity_extremes, featurize,
                               local_clustering, summarize, triangles_per_vertex)
from gmsbench.generators import ErParams, Seed, generate_er
from gmsbench.graph import graph_from_edges
from gmsbench.kernels import _pykernels


def random_graph(rng, n_min=4, n_max=12):
    n = int(rng.integers(n_min, n_max + 1))
    p = rng.uniform(0.1, 0.7)
    return generate_er(ErParams(n, p), Seed(int(rng.integers(2**32))))


class TestSummarize:
    def test_constant_list(self):
        assert summarize([5, 5, 5]) == (5, 5, 5, 0)

    def test_singleton(self):
        assert summarize([7]) == (7, 7, 7, 0)

    def test_hand_arithmetic(self):
        s = summarize([1, 2, 3, 4])
        assert s.min == 1 and s.max == 4
        assert s.avg == pytest.approx(2.5, abs=1e-15)
        assert s.std == pytest.approx(math.sqrt(1.25), abs=1e-15)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            summarize([])

    def test_order_constraints_random(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            vals = rng.normal(size=int(rng.integers(1, 30)))
            s = summarize(vals)
            assert s.min <= s.avg <= s.max
            assert s.std >= 0
            assert (s.std == 0) == bool(np.all(vals == vals[0]))


class TestFeatureLayout:
    def test_slot_names(self):
        assert NUM_FEATURES == 26
        assert FEATURE_NAMES[0:4] == ("degree_min", "degree_max", "degree_avg", "degree_std")
        assert FEATURE_NAMES[4] == "betweenness_min"
        assert FEATURE_NAMES[8] == "closeness_min"
        assert FEATURE_NAMES[12] == "clustering_min"
        assert DIAMETER_INDEX == 16
        assert RADIUS_INDEX == 17
        assert FEATURE_NAMES[18] == "triads_min"
        assert FEATURE_NAMES[22] == "aspl_min"

    def test_critical_subset(self):
        assert len(CRITICAL_FEATURES) == 16
        assert len(set(CRITICAL_FEATURES)) == 16
        assert CRITICAL_FEATURES == (4, 5, 8, 9, 10, 11, 12, 13, 14, 15, 19, 20, 21, 23, 24, 25)


class TestHandExamples:
    def test_degree(self, k4, star5):
        assert np.allclose(degree_centrality(k4), 1.0)
        assert np.allclose(degree_centrality(star5), [1.0, 0.25, 0.25, 0.25, 0.25])
        assert np.allclose(degree_centrality(graph_from_edges(3, [])), 0.0)

    def test_degree_needs_two_vertices(self):
        with pytest.raises(ValueError):
            degree_centrality(graph_from_edges(1, []))

    def test_betweenness(self, k4, p3, star5):
        assert np.allclose(betweenness_centrality(k4), 0.0)
        assert np.allclose(betweenness_centrality(p3), [0.0, 1.0, 0.0])
        assert np.allclose(betweenness_centrality(star5), [1.0, 0, 0, 0, 0])

    def test_betweenness_needs_three_vertices(self):
        with pytest.raises(ValueError):
            betweenness_centrality(graph_from_edges(2, [(0, 1)]))

    def test_closeness(self, k4, p3):
        assert np.allclose(closeness_centrality(k4), 1.0)
        assert np.allclose(closeness_centrality(p3), [2 / 3, 1.0, 2 / 3])
        with_isolated = graph_from_edges(4, [(0, 1), (1, 2)])
        assert closeness_centrality(with_isolated)[3] == 0.0

    def test_clustering(self, k4, star5, k4_minus_edge):
        assert np.allclose(local_clustering(k4), 1.0)
        assert np.allclose(local_clustering(star5), 0.0)
        assert np.allclose(local_clustering(k4_minus_edge), [2 / 3, 2 / 3, 1.0, 1.0])

    def test_triangles(self, k4):
        assert np.allclose(triangles_per_vertex(k4), 3.0)
        tree = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
        assert np.allclose(triangles_per_vertex(tree), 0.0)
        pendant = graph_from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        assert np.allclose(triangles_per_vertex(pendant), [1, 1, 1, 0])

    def test_eccentricity(self, k4, p3, c6):
        assert eccentricity_extremes(k4) == (1, 1)
        assert eccentricity_extremes(p3) == (2, 1)
        assert eccentricity_extremes(c6) == (3, 3)

    def test_aspl(self, k4, p3):
        assert np.allclose(avg_shortest_path_per_vertex(k4), 1.0)
        assert np.allclose(avg_shortest_path_per_vertex(p3), [1.5, 1.0, 1.5])
        lonely = graph_from_edges(3, [(0, 1)])
        assert avg_shortest_path_per_vertex(lonely)[2] == 0.0

    def test_featurize_k4(self, k4):
        vec = featurize(k4)
        expected = [1, 1, 1, 0,  # degree
                    0, 0, 0, 0,  # betweenness
                    1, 1, 1, 0,  # closeness
                    1, 1, 1, 0,  # clustering
                    1, 1,        # diameter, radius
                    3, 3, 3, 0,  # triads
                    1, 1, 1, 0]  # aspl
        assert np.allclose(vec, expected, atol=1e-12)

    def test_featurize_empty_graph_all_zero(self):
        assert np.allclose(featurize(graph_from_edges(3, [])), 0.0)

    def test_featurize_needs_three_vertices(self):
        with pytest.raises(ValueError):
            featurize(graph_from_edges(2, [(0, 1)]))


class TestOracleEquivalence:
    def test_random_graphs_match_bruteforce(self):
        rng = np.random.default_rng(2024)
        for _ in range(120):
            g = random_graph(rng)
            assert np.allclose(degree_centrality(g), ref.degree_reference(g), atol=1e-9)
            assert np.allclose(betweenness_centrality(g), ref.betweenness_reference(g), atol=1e-9)
            assert np.allclose(closeness_centrality(g), ref.closeness_reference(g), atol=1e-9)
            assert np.allclose(local_clustering(g), ref.clustering_reference(g), atol=1e-9)
            assert np.allclose(triangles_per_vertex(g), ref.triangles_reference(g), atol=1e-9)
            assert np.allclose(avg_shortest_path_per_vertex(g), ref.aspl_reference(g), atol=1e-9)
            assert eccentricity_extremes(g) == ref.extremes_reference(g)

    def test_disconnected_graphs_match_bruteforce(self):
        rng = np.random.default_rng(77)
        for _ in range(40):
            n = int(rng.integers(5, 11))
            m = int(rng.integers(0, n))
            pairs = set()
            while len(pairs) < m:
                u, v = rng.integers(0, n, 2)
                if u != v:
                    pairs.add((min(u, v), max(u, v)))
            g = graph_from_edges(n, list(pairs))
            assert np.allclose(betweenness_centrality(g), ref.betweenness_reference(g), atol=1e-9)
            assert np.allclose(closeness_centrality(g), ref.closeness_reference(g), atol=1e-9)
            assert np.allclose(avg_shortest_path_per_vertex(g), ref.aspl_reference(g), atol=1e-9)
            assert eccentricity_extremes(g) == ref.extremes_reference(g)


class TestInvariants:
    def test_permutation_invariance(self):
        # integer-valued slots are exactly invariant; float means/stds are
        # summed in vertex order, so relabeling moves them by at most an ulp
        exact_slots = [0, 1, 16, 17, 18, 19]  # degree min/max, diameter, radius, triads min/max
        rng = np.random.default_rng(9)
        for _ in range(20):
            g = random_graph(rng, n_min=5, n_max=10)
            base = featurize(g)
            perm = rng.permutation(g.n)
            relabeled = graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edge_array])
            vec = featurize(relabeled)
            assert np.array_equal(vec[exact_slots], base[exact_slots])
            assert np.allclose(vec, base, rtol=0, atol=1e-12)

    def test_range_checks(self):
        rng = np.random.default_rng(13)
        for _ in range(30):
            vec = featurize(random_graph(rng))
            assert np.all(np.isfinite(vec))
            assert np.all(vec[0:16] >= 0) and np.all(vec[0:16] <= 1)
            assert vec[DIAMETER_INDEX] >= vec[RADIUS_INDEX] >= 0
            assert np.all(vec[18:22] >= 0)
            for base in (0, 4, 8, 12, 18, 22):
                mn, mx, avg, _ = vec[base:base + 4]
                assert mn <= avg + 1e-12 and avg <= mx + 1e-12

    def test_shared_pass_matches_independent_bfs(self):
        rng = np.random.default_rng(21)
        for _ in range(15):
            g = random_graph(rng, n_min=6, n_max=14)
            vec = featurize(g)
            assert np.allclose(vec[8:12], summarize(ref.closeness_bfs(g)), atol=1e-12)
            assert np.allclose(vec[22:26], summarize(ref.aspl_bfs(g)), atol=1e-12)
            assert np.allclose(closeness_centrality(g), ref.closeness_bfs(g), atol=1e-12)
            assert np.allclose(avg_shortest_path_per_vertex(g), ref.aspl_bfs(g), atol=1e-12)


@pytest.mark.skipif(kernels.BACKEND != "c", reason="compiled backend not built")
class TestBackendParity:
    def test_kernels_agree_on_random_graphs(self):
        rng = np.random.default_rng(31)
        for _ in range(25):
            g = random_graph(rng, n_min=4, n_max=30)
            c_bc, c_ds, c_r, c_e = kernels.betweenness_distance_pass(g.indptr, g.indices, g.n)
            p_bc, p_ds, p_r, p_e = _pykernels.betweenness_distance_pass(g.indptr, g.indices, g.n)
            assert np.allclose(c_bc, p_bc, rtol=0, atol=1e-9)
            assert np.array_equal(c_ds, p_ds)
            assert np.array_equal(c_r, p_r)
            assert np.array_equal(c_e, p_e)
            assert np.array_equal(kernels.triangle_counts(g.indptr, g.indices, g.n),
                                  _pykernels.triangle_counts(g.indptr, g.indices, g.n))
            assert np.array_equal(kernels.component_labels(g.indptr, g.indices, g.n),
                                  _pykernels.component_labels(g.indptr, g.indices, g.n))

    def test_kernels_agree_at_scale(self):
        g = generate_er(ErParams(300, 0.08), Seed(404))
        c_bc, c_ds, c_r, c_e = kernels.betweenness_distance_pass(g.indptr, g.indices, g.n)
        p_bc, p_ds, p_r, p_e = _pykernels.betweenness_distance_pass(g.indptr, g.indices, g.n)
        assert np.allclose(c_bc, p_bc, rtol=0, atol=1e-9)
        assert np.array_equal(c_ds, p_ds)
        assert np.array_equal(c_r, p_r)
        assert np.array_equal(c_e, p_e)

    def test_featurize_identical_under_pure_backend(self, monkeypatch, k4_minus_edge):
        import gmsbench.features as feats
        compiled = featurize(k4_minus_edge)
        monkeypatch.setattr(feats, "kernels", _pykernels)
        pure = feats.featurize(k4_minus_edge)
        assert np.allclose(compiled, pure, rtol=0, atol=1e-12)
