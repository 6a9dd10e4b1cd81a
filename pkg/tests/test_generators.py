import math

import numpy as np
import pytest

from gmsbench.generators import (ErParams, SbmParams, Seed, expected_density,
                                 generate_er, generate_sbm, rewire_uniform,
                                 rewire_uniform_with_stats)
from gmsbench.graph import graph_from_edges

PAIRS_1000 = 1000 * 999 // 2


class TestSeed:
    def test_same_seed_same_stream(self):
        a = Seed(42, 3).rng().random(8)
        b = Seed(42, 3).rng().random(8)
        assert np.array_equal(a, b)

    def test_distinct_indices_distinct_streams(self):
        a = Seed(42, 0).rng().random(8)
        b = Seed(42, 1).rng().random(8)
        assert not np.array_equal(a, b)

    def test_derive_is_deterministic_and_key_sensitive(self):
        s = Seed(7)
        assert s.derive("er", 10) == s.derive("er", 10)
        assert s.derive("er", 10) != s.derive("er", 11)
        assert s.derive("er", 10) != s.derive("sbm", 10)
        assert s.derive("ab") != s.derive("a", "b")

    def test_validation(self):
        with pytest.raises(ValueError):
            Seed(-1)
        with pytest.raises(ValueError):
            Seed(2**64)
        with pytest.raises(ValueError):
            Seed(0, -1)
        with pytest.raises(TypeError):
            Seed(0).derive(1.5)


class TestParams:
    def test_er_validation(self):
        with pytest.raises(ValueError):
            ErParams(1, 0.5)
        with pytest.raises(ValueError):
            ErParams(10, 1.5)

    def test_sbm_validation(self):
        with pytest.raises(ValueError):
            SbmParams(10, 0.1, 0.2)  # p_in < p_out
        with pytest.raises(ValueError):
            SbmParams(10, 0.5, 0.1, k=1)
        # diagnostic mode: equality allowed
        SbmParams(10, 0.3, 0.3)

    def test_pair_counts(self):
        w, c = SbmParams(1000, 0.12, 0.04).pair_counts()
        assert w == 249500
        assert c == 250000
        assert w + c == PAIRS_1000


class TestErdosRenyi:
    def test_p_one_gives_complete_graph(self):
        g = generate_er(ErParams(4, 1.0), Seed(999))
        assert g.num_edges == 6

    def test_p_zero_gives_empty_graph(self):
        g = generate_er(ErParams(10, 0.0), Seed(999))
        assert g.num_edges == 0

    def test_deterministic(self):
        a = generate_er(ErParams(60, 0.2), Seed(5, 3))
        b = generate_er(ErParams(60, 0.2), Seed(5, 3))
        assert a == b

    def test_result_is_simple_graph(self):
        g = generate_er(ErParams(50, 0.3), Seed(1))
        rebuilt = graph_from_edges(g.n, g.edge_array)
        assert rebuilt == g

    def test_seed_independence_full_scale(self):
        # no two of 100 instance streams at n=1000, p=.08 may coincide
        digests = set()
        for i in range(100):
            g = generate_er(ErParams(1000, 0.08), Seed(123, i))
            digests.add(g.edge_array.tobytes())
        assert len(digests) == 100

    def test_mean_density_on_every_grid_p(self):
        # empirical mean density within 4 standard errors of p, 100 seeds each
        n_seeds = 100
        for p_mills in range(10, 95, 5):
            p = p_mills / 1000
            counts = [generate_er(ErParams(1000, p), Seed(777, i)).num_edges
                      for i in range(n_seeds)]
            expected = PAIRS_1000 * p
            se = math.sqrt(PAIRS_1000 * p * (1 - p) / n_seeds)
            assert abs(np.mean(counts) - expected) < 4 * se, f"p={p}"


class TestSbm:
    def test_extreme_probabilities(self):
        g = generate_sbm(SbmParams(4, 1.0, 0.0), Seed(3))
        assert g.edge_set() == {(0, 1), (2, 3)}

    def test_equal_probabilities_match_er_exactly(self):
        # same per-pair uniform draws, so the graphs are identical
        for seed in (Seed(1), Seed(2, 5)):
            er = generate_er(ErParams(80, 0.15), seed)
            sbm = generate_sbm(SbmParams(80, 0.15, 0.15), seed)
            assert er == sbm

    def test_deterministic(self):
        a = generate_sbm(SbmParams(60, 0.3, 0.1), Seed(8, 2))
        b = generate_sbm(SbmParams(60, 0.3, 0.1), Seed(8, 2))
        assert a == b

    def test_expected_density_examples(self):
        d = expected_density(SbmParams(1000, 0.12, 0.04))
        assert d.exact == pytest.approx((0.12 * 249500 + 0.04 * 250000) / 499500, abs=1e-15)
        assert d.exact == pytest.approx(0.079960, abs=5e-7)
        assert d.approx == pytest.approx(0.08, abs=1e-15)
        d2 = expected_density(SbmParams(1000, 0.15, 0.01))
        assert d2.exact == pytest.approx(0.079930, abs=5e-7)
        assert d2.approx == pytest.approx(0.08, abs=1e-15)

    def test_expected_density_equal_probs_is_p(self):
        d = expected_density(SbmParams(100, 0.25, 0.25))
        assert d.exact == 0.25
        assert d.approx == 0.25

    def test_mean_edges_near_expectation(self):
        params = SbmParams(1000, 0.12, 0.04)
        counts = [generate_sbm(params, Seed(555, i)).num_edges for i in range(30)]
        expected = 0.12 * 249500 + 0.04 * 250000
        var = 249500 * 0.12 * 0.88 + 250000 * 0.04 * 0.96
        se = math.sqrt(var / 30)
        assert expected == 39940.0
        assert abs(np.mean(counts) - expected) < 4 * se

    def test_odd_n_remainder_in_last_block(self):
        params = SbmParams(5, 1.0, 0.0)
        assert params.block_sizes() == [2, 3]
        g = generate_sbm(params, Seed(0))
        assert g.edge_set() == {(0, 1), (2, 3), (2, 4), (3, 4)}


class TestRewire:
    def _sbm(self, seed=11):
        return generate_sbm(SbmParams(300, 0.12, 0.04), Seed(seed))

    def test_fraction_zero_is_identity(self):
        g = self._sbm()
        assert rewire_uniform(g, 0.0, Seed(1)) is g

    def test_edge_count_preserved(self):
        g = self._sbm()
        for fraction in (0.1, 0.2, 0.5, 1.0):
            rw = rewire_uniform(g, fraction, Seed(2))
            assert rw.num_edges == g.num_edges
            assert rw.n == g.n

    def test_result_is_simple_graph(self):
        g = self._sbm()
        rw = rewire_uniform(g, 0.3, Seed(4))
        rebuilt = graph_from_edges(rw.n, rw.edge_array)
        assert rebuilt == rw

    def test_deterministic(self):
        g = self._sbm()
        assert rewire_uniform(g, 0.25, Seed(6)) == rewire_uniform(g, 0.25, Seed(6))
        assert rewire_uniform(g, 0.25, Seed(6)) != rewire_uniform(g, 0.25, Seed(7))

    def test_invalid_fraction(self):
        with pytest.raises(ValueError):
            rewire_uniform(self._sbm(), 1.5, Seed(0))

    def test_near_complete_graph_skips(self):
        complete = graph_from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        rw, skipped = rewire_uniform_with_stats(complete, 1.0, Seed(5))
        assert rw.num_edges == 6
        assert skipped == 6  # K4: no replacement target ever exists
        assert rw == complete

    @staticmethod
    def _within_fraction(g, k=2):
        half = g.n // k
        same = np.sum((g.edge_array[:, 0] < half) == (g.edge_array[:, 1] < half))
        return same / g.num_edges

    def test_full_rewire_approaches_uniform_pairs(self):
        # cross-block edge share tends to C/(W+C) = .5005 at n=1000
        params = SbmParams(1000, 0.12, 0.04)
        cross = []
        for i in range(50):
            g = generate_sbm(params, Seed(31, i))
            rw = rewire_uniform(g, 1.0, Seed(33, i))
            cross.append(1.0 - self._within_fraction(rw))
        assert abs(np.mean(cross) - 250000 / 499500) < 0.02

    def test_monotone_community_erosion(self):
        params = SbmParams(1000, 0.12, 0.04)
        fractions = (0.0, 0.1, 0.2, 1.0)
        means = []
        for fraction in fractions:
            vals = []
            for i in range(30):
                g = generate_sbm(params, Seed(41, i))
                rw = rewire_uniform(g, fraction, Seed(43, i)) if fraction else g
                vals.append(self._within_fraction(rw))
            means.append(np.mean(vals))
        for a, b in zip(means, means[1:]):
            assert b <= a + 1e-9
