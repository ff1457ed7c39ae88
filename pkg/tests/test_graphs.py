import io
from collections import Counter

import numpy as np
import pytest

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.errors import DomainError, GraphInvariantError, InfeasibleRemovalError, ParityError
from src.graphs.components import UnionFind, components
from src.graphs.explosion import explode_vertices, exploded_counts, strip_red
from src.graphs.half_edge_graph import RED, HalfEdgeGraph
from src.graphs.removal import (
    empirical_alpha_sequence,
    quantile_victims,
    remove_by_alpha_sequence,
    removal_victims,
)
from src.graphs.rng import stream
from src.graphs.sampling import sample_cm, sample_degree_sequence


def seq(mapping):
    return AlphaSequence.from_mapping(mapping)


def partitions(total, largest=None):
    """Degree sequences summing to ``total``, as non-increasing tuples of positive degrees."""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def perfect_matchings(halves):
    if not halves:
        yield []
        return
    first, rest = halves[0], halves[1:]
    for i, other in enumerate(rest):
        for tail in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail


def multigraph_law(degrees):
    """Exact law of the configuration-model multigraph, by listing every perfect matching."""
    owner = np.repeat(np.arange(len(degrees)), degrees).tolist()
    counts = Counter(
        tuple(sorted(tuple(sorted((owner[a], owner[b]))) for a, b in m))
        for m in perfect_matchings(list(range(len(owner))))
    )
    total = sum(counts.values())
    return {graph: c / total for graph, c in counts.items()}


def matching_distance(degrees, samples, seed):
    """Total variation between sampled and exact multigraph frequencies."""
    rng = np.random.default_rng(seed)
    seen = Counter(tuple(sample_cm(degrees, rng).canonical_edges()) for _ in range(samples))
    exact = multigraph_law(degrees)
    support = set(exact) | set(seen)
    return 0.5 * sum(abs(seen.get(g, 0) / samples - exact.get(g, 0.0)) for g in support)


class TestHalfEdgeGraph:
    def test_degrees_and_self_loops(self):
        g = HalfEdgeGraph.from_edges(2, [(0, 0), (0, 1)])
        assert g.degrees.tolist() == [3, 1]
        assert g.adjacency().toarray().tolist() == [[2.0, 1.0], [1.0, 0.0]]
        assert g.n_edges == 2

    def test_matching_must_be_involution(self):
        with pytest.raises(GraphInvariantError):
            HalfEdgeGraph.from_matching([1, 1], [0, 1])

    def test_delete_keeps_ids(self):
        g = HalfEdgeGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
        h = g.delete_vertices([0])
        assert h.size == 3 and h.n_alive == 2
        assert h.degrees.tolist() == [0, 1, 1]
        assert h.canonical_edges() == [(1, 2)]
        assert g.n_edges == 3

    def test_dump(self, star):
        buf = io.StringIO()
        star.delete_vertices([3]).dump(buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "v 0 2 normal"
        assert sorted(line for line in lines if line.startswith("e")) == ["e 0 1", "e 0 2"]


class TestSampling:
    def test_degree_sequence_parity(self, p13):
        for replica in range(20):
            degrees = sample_degree_sequence(p13, 101, stream(7, "degrees", replica=replica))
            assert degrees.size == 101 and degrees.sum() % 2 == 0

    def test_tiny_n(self, p13):
        with pytest.raises(DomainError):
            sample_degree_sequence(p13, 1, 0)

    def test_odd_sum(self):
        with pytest.raises(ParityError):
            sample_cm([1, 2], 0)

    def test_configuration_model_keeps_degrees(self, mixed):
        degrees = sample_degree_sequence(mixed, 500, 3)
        g = sample_cm(degrees, 3)
        assert g.degrees.tolist() == degrees.tolist()

    def test_matching_is_uniform(self):
        rng = np.random.default_rng(2024)
        samples = 20000
        loops = 0
        for _ in range(samples):
            edges = sample_cm([2, 2], rng).edge_list()
            loops += int(edges[0, 0] == edges[0, 1])
        # one of the three matchings of four half-edges gives two loops
        assert loops / samples == pytest.approx(1 / 3, abs=0.02)

    def test_multigraph_law_by_hand(self):
        assert multigraph_law((2, 2)) == pytest.approx({((0, 0), (1, 1)): 1 / 3, ((0, 1), (0, 1)): 2 / 3})
        assert len(list(perfect_matchings(list(range(8))))) == 105
        assert sum(1 for total in (2, 4, 6, 8) for _ in partitions(total)) == 40

    @pytest.mark.parametrize("degrees", [d for total in (2, 4, 6) for d in partitions(total)])
    def test_small_sequences_match_enumeration(self, degrees):
        assert matching_distance(degrees, 5000, seed=sum(degrees) * 31 + len(degrees)) <= 0.06

    @pytest.mark.slow
    @pytest.mark.parametrize("degrees", [d for total in (2, 4, 6, 8) for d in partitions(total)])
    def test_every_sequence_up_to_eight_half_edges(self, degrees):
        assert matching_distance(degrees, 100_000, seed=sum(degrees) * 31 + len(degrees)) <= 0.02

    @pytest.mark.slow
    def test_two_loops_frequency(self):
        rng = np.random.default_rng(7)
        samples = 100_000
        loops = sum(sample_cm([2, 2], rng).canonical_edges()[0] == (0, 0) for _ in range(samples))
        assert loops / samples == pytest.approx(1 / 3, abs=0.01)

    def test_streams_are_reproducible(self, p13):
        a = sample_cm(sample_degree_sequence(p13, 200, stream(1, "degrees")), stream(1, "matching"))
        b = sample_cm(sample_degree_sequence(p13, 200, stream(1, "degrees")), stream(1, "matching"))
        assert a.canonical_edges() == b.canonical_edges()
        assert stream(1, "degrees").random() != stream(1, "matching").random()


class TestExplosion:
    def test_star_counts(self, star):
        counts = exploded_counts(star, [0])
        assert (counts.n_tilde, counts.n_plus, counts.per_degree) == (6, 3, {1: 6})

        exploded = explode_vertices(star, [0])
        assert exploded.n_alive == 6
        assert exploded.degree_counts() == {1: 6}
        assert int((exploded.labels == RED).sum()) == 3

    def test_explode_then_strip_is_deletion(self, mixed, rng):
        for trial in range(100):
            g = sample_cm(sample_degree_sequence(mixed, 60, stream(trial, "degrees")), stream(trial, "matching"))
            victims = rng.choice(g.size, size=int(rng.integers(0, 20)), replace=False)
            exploded = explode_vertices(g, victims)

            counts = exploded_counts(g, victims)
            assert exploded.n_alive == counts.n_tilde
            assert exploded.degree_counts() == counts.per_degree

            stripped, deleted = strip_red(exploded), g.delete_vertices(victims)
            assert stripped.canonical_edges() == deleted.canonical_edges()
            assert stripped.vertex_alive[:g.size].tolist() == deleted.vertex_alive.tolist()
            assert not stripped.vertex_alive[g.size:].any()

    def test_dead_victims_are_skipped(self, star):
        g = star.delete_vertices([3])
        assert exploded_counts(g, [3]) == exploded_counts(g, [])
        counts = exploded_counts(g, [3, 0])
        assert (counts.n_tilde, counts.n_plus, counts.per_degree) == (4, 2, {1: 4})

        exploded = explode_vertices(g, [3, 0])
        assert exploded.n_alive == counts.n_tilde
        assert exploded.degree_counts() == counts.per_degree
        assert not exploded.vertex_alive[3]

    def test_strip_rejects_fat_red_vertex(self, star):
        g = star.copy()
        g.labels[0] = RED
        with pytest.raises(GraphInvariantError):
            strip_red(g)


class TestRemoval:
    def test_empirical_counts(self, cycle):
        victims = removal_victims(cycle, seq({2: 0.5}), rng_seed=0)
        assert victims.size == 5 and np.unique(victims).size == 5

    def test_missing_degree_is_kept(self, cycle, caplog):
        victims = removal_victims(cycle, seq({3: 1.0}), rng_seed=0)
        assert victims.size == 0
        assert "no removal fraction" in caplog.text

    def test_limiting_convention(self, cycle):
        p = DegreeDistribution.regular(2)
        assert removal_victims(cycle, seq({2: 0.3}), "limiting", 0, p).size == 3
        with pytest.raises(DomainError):
            removal_victims(cycle, seq({2: 0.3}), "limiting", 0)

    def test_limiting_infeasible(self):
        path = HalfEdgeGraph.from_edges(3, [(0, 1), (1, 2)])
        with pytest.raises(InfeasibleRemovalError):
            removal_victims(path, seq({1: 0.0, 2: 1.0}), "limiting", 0, DegreeDistribution.regular(2))

    def test_quantiles(self, star):
        assert quantile_victims(star, 0.25, "top", 0).tolist() == [0]
        assert 0 not in quantile_victims(star, 0.5, "bottom", 0)
        assert sorted(quantile_victims(star, 0.75, "bottom", 0).tolist()) == [1, 2, 3]

    def test_empirical_alpha_sequence(self, cycle):
        assert empirical_alpha_sequence(cycle, seq({2: 0.25})).mass == pytest.approx({2: 0.2})

    def test_removal_is_reproducible(self, cycle):
        a = remove_by_alpha_sequence(cycle, seq({2: 0.5}), rng_seed=stream(3, "removal"))
        b = remove_by_alpha_sequence(cycle, seq({2: 0.5}), rng_seed=stream(3, "removal"))
        assert a.vertex_alive.tolist() == b.vertex_alive.tolist()


class TestComponents:
    def test_union_find(self):
        uf = UnionFind(5)
        uf.union(3, 4)
        uf.union(4, 1)
        assert uf.find(3) == 1 and uf.num_components == 3

    def test_two_triangles(self, two_triangles):
        summary = components(two_triangles)
        assert summary.component_count == 3
        assert (summary.giant_vertices, summary.giant_edges) == (3, 3)
        assert summary.giant_per_degree == {2: 3}
        assert summary.sizes == [3, 3, 1]

    def test_self_loop(self):
        summary = components(HalfEdgeGraph.from_edges(1, [(0, 0)]))
        assert (summary.component_count, summary.giant_vertices, summary.giant_edges) == (1, 1, 1)
        assert summary.giant_per_degree == {2: 1}

    def test_empty(self, star):
        summary = components(star.delete_vertices([0, 1, 2, 3]))
        assert summary.component_count == 0 and summary.giant_vertices == 0

    def test_giant_matches_theory(self, p13):
        # eta = 1/3 without removal, so v_j(C1)/n -> p_j (1 - eta^j)
        n = 40000
        g = sample_cm(sample_degree_sequence(p13, n, stream(5, "degrees")), stream(5, "matching"))
        summary = components(g)
        assert summary.giant_vertices / n == pytest.approx(44 / 54, abs=0.02)
        assert summary.giant_edges / n == pytest.approx(8 / 9, abs=0.02)
        assert summary.giant_per_degree[1] / n == pytest.approx(1 / 3, abs=0.02)

    @pytest.mark.slow
    def test_giant_gap_shrinks_with_n(self, p13):
        gaps = []
        for i, n in enumerate((10_000, 40_000, 160_000)):
            fractions = []
            for replica in range(16):
                g = sample_cm(sample_degree_sequence(p13, n, stream(6, "degrees", i, replica)),
                              stream(6, "matching", i, replica))
                fractions.append(components(g).giant_vertices / n)
            gaps.append(float(np.mean(np.abs(np.array(fractions) - 44 / 54))))
        assert gaps[1] < gaps[0]
        assert gaps[2] < gaps[0] / 2
