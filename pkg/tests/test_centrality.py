import numpy as np
import pytest

from src.centrality.ball_hash import ball_digest_distribution, ball_hash, total_variation
from src.centrality.consistency import killed_ball_consistency_check
from src.centrality.local_limit import local_limit_estimates
from src.centrality.scores import (
    degree_centrality,
    degree_rank_centrality,
    finite_radius_pagerank,
    kill_by_threshold,
    threshold_kill_sequence,
)
from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.errors import DomainError
from src.graphs.half_edge_graph import HalfEdgeGraph
from src.graphs.rng import stream
from src.graphs.sampling import sample_cm, sample_degree_sequence
from src.theory.fixed_point import janson_luczak


class TestScores:
    @pytest.mark.parametrize("N", [0, 1, 2, 5])
    def test_regular_graph_pagerank(self, cycle, N):
        scores = finite_radius_pagerank(cycle, 0.85, N)
        assert scores.values == pytest.approx(np.full(cycle.size, 1 - 0.85 ** (N + 1)), abs=1e-12)

    def test_pagerank_grows_with_radius(self, star):
        previous = finite_radius_pagerank(star, 0.5, 0).values
        for N in range(1, 6):
            current = finite_radius_pagerank(star, 0.5, N).values
            assert np.all(current >= previous - 1e-15)
            previous = current
        assert previous[0] > previous[1]

    def test_isolated_vertex_is_absorbing(self):
        g = HalfEdgeGraph.from_edges(3, [(0, 1)])
        scores = finite_radius_pagerank(g, 0.85, 1)
        assert scores.values == pytest.approx(np.full(3, 0.15 * 1.85))

    def test_pagerank_domain(self, star):
        with pytest.raises(DomainError):
            finite_radius_pagerank(star, 1.0, 2)
        with pytest.raises(DomainError):
            finite_radius_pagerank(star, 0.85, -1)

    def test_degree_threshold_kill(self, star):
        killed = kill_by_threshold(star, degree_centrality(star), 2)
        assert killed.n_alive == 3 and killed.n_edges == 0

    def test_degree_rank(self, cycle):
        scores = degree_rank_centrality(cycle, 0)
        assert sorted(scores.values.tolist()) == pytest.approx([(i + 1) / 10 for i in range(10)])

    def test_threshold_kill_sequence(self, mixed):
        assert threshold_kill_sequence(mixed, 2.5).mass == {1: 0.0, 2: 0.0, 3: 1.0, 5: 1.0}


class TestBallHash:
    def test_symmetric_vertices_agree(self, cycle):
        digests = {ball_hash(cycle, v, 2).digest for v in range(cycle.size)}
        assert len(digests) == 1

    def test_centre_and_leaf_differ(self, star):
        assert ball_hash(star, 0, 1).digest != ball_hash(star, 1, 1).digest
        assert ball_hash(star, 1, 1).digest == ball_hash(star, 2, 1).digest

    def test_radius_zero_is_a_lone_root(self, star):
        assert ball_hash(star, 0, 0).digest == ball_hash(star, 1, 0).digest

    def test_boundary_degree_is_seen_one_step_later(self):
        path = HalfEdgeGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        short = HalfEdgeGraph.from_edges(2, [(0, 1)])
        assert ball_hash(path, 0, 1).digest == ball_hash(short, 0, 1).digest
        assert ball_hash(path, 0, 2).digest != ball_hash(short, 0, 2).digest

    def test_digest_distribution(self, two_triangles):
        law = ball_digest_distribution(two_triangles, 1)
        assert sum(law.values()) == pytest.approx(1.0)
        assert sorted(law.values()) == pytest.approx([1 / 7, 6 / 7])

    def test_total_variation(self):
        assert total_variation({"a": 1.0}, {"b": 1.0}) == 1.0
        assert total_variation({"a": 0.5, "b": 0.5}, {"a": 0.5, "b": 0.5}) == 0.0


class TestConsistency:
    def test_degree_kill_acts_locally(self, mixed):
        g = sample_cm(sample_degree_sequence(mixed, 3000, stream(11, "degrees")), stream(11, "matching"))
        report = killed_ball_consistency_check(g, 0, 2, 1, sample=1500, rng_seed=11)
        assert report.violations == 0
        assert report.pairs_compared > 0

    def test_degree_has_radius_zero(self, star):
        with pytest.raises(DomainError):
            killed_ball_consistency_check(star, 1, 2, 1)


class TestLocalLimit:
    def test_single_edges(self):
        p = DegreeDistribution.regular(1)
        est = local_limit_estimates(p, AlphaSequence.constant(p, 0.0), cutoff=100, samples=1000, rng_seed=1)
        assert (est.zeta, est.inv_component_mean) == (0.0, 0.5)
        assert est.inv_component_stderr == 0.0

    def test_everything_killed(self, p13):
        est = local_limit_estimates(p13, threshold_kill_sequence(p13, 0), cutoff=100, samples=1000, rng_seed=1)
        assert (est.zeta, est.inv_component_mean) == (0.0, 0.0)

    def test_regular_tree_survives(self, cubic):
        est = local_limit_estimates(cubic, AlphaSequence.constant(cubic, 0.0), cutoff=50, samples=500, rng_seed=1)
        assert (est.zeta, est.inv_component_mean) == (1.0, 0.0)

    def test_two_atoms_threshold(self, p13):
        # live roots have degree 1 and reach a live degree-1 neighbour with probability 1/4
        est = local_limit_estimates(p13, threshold_kill_sequence(p13, 2), cutoff=100, samples=20000,
                                    rng_seed=stream(2, "local_limit"))
        assert est.zeta == 0.0
        assert est.inv_component_mean == pytest.approx(0.5 * (0.25 * 0.5 + 0.75), abs=0.01)

    def test_survival_matches_giant_without_kill(self, p13):
        jl = janson_luczak(p13)
        assert 0.0 < jl.eta < 1.0
        est = local_limit_estimates(p13, threshold_kill_sequence(p13, 10), cutoff=500, samples=10_000,
                                    rng_seed=stream(3, "local_limit"))
        assert abs(est.zeta - jl.rho) <= 3 * est.zeta_stderr + 0.005

    def test_needs_zero_one_sequence(self, p13):
        with pytest.raises(DomainError):
            local_limit_estimates(p13, AlphaSequence.constant(p13, 0.5), cutoff=10, samples=10)
