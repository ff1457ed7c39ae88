#!/usr/bin/env python3
"""
Run the long simulation checks against the closed-form theory.

Each scenario samples large configuration models, removes or kills vertices,
and compares what it measures with the theory or with the local-limit
estimates. Results are logged and, with --out, appended as JSON Lines.
"""

import argparse
import logging
import sys
from collections import Counter
from pathlib import Path

import jsonlines

from src.centrality.ball_hash import ball_digest_distribution, total_variation
from src.centrality.consistency import killed_ball_consistency_check
from src.centrality.local_limit import local_limit_estimates
from src.centrality.scores import degree_centrality, finite_radius_pagerank, kill_by_threshold, threshold_kill_sequence
from src.degrees.distributions import DegreeDistribution
from src.graphs.components import components
from src.graphs.rng import stream
from src.graphs.sampling import sample_cm, sample_degree_sequence
from src.harness.experiment import ExperimentSpec, run
from src.settings import DEFAULT_SEED, DEFAULT_THREADS, LOCAL_LIMIT_CUTOFF, LOCAL_LIMIT_SAMPLES, LOG_FORMAT
from src.theory.critical import critical_alpha

logger = logging.getLogger(__name__)

TWO_ATOMS = {1: 0.5, 3: 0.5}
# supercritical after killing degree 8: nu = 4.2 / 3.6
THRESHOLD_LAW = {1: 0.3, 3: 0.3, 4: 0.2, 8: 0.2}
THRESHOLD = 5.0


def parse_arguments():
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(description="Run the simulation checks against the theory")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Root seed for every scenario")
    parser.add_argument("--threads", type=int, default=DEFAULT_THREADS, help="Worker processes for replicas")
    parser.add_argument("--only", action="append", help="Run only the named scenario (repeatable)")
    parser.add_argument("--out", help="Append results to this JSON Lines file")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging")
    return parser.parse_args()


def giant_on_cubic(seed, threads=1, n=200_000, replicas=5):
    """Uniform removal of a tenth of a random cubic graph."""
    spec = ExperimentSpec.from_json({
        "distribution": {"3": 1.0},
        "removal": {"kind": "uniform", "alpha": 0.1},
        "n_grid": [n],
        "replicas": replicas,
        "seed": seed,
    })
    (entry,) = run(spec, threads).deviations
    return {
        "scenario": "giant_on_cubic",
        "v_giant_mean": entry["v_giant_mean"],
        "e_giant_mean": entry["e_giant_mean"],
        "passed": abs(entry["v_giant_mean"] - 0.8987654321) <= 0.005
                  and abs(entry["e_giant_mean"] - 1.2148148148) <= 0.01,
    }


def criticality(seed, threads=1, n=200_000, replicas=5, offset=0.1):
    """Top removal on either side of the critical fraction."""
    alpha_c = critical_alpha(DegreeDistribution.from_mapping(TWO_ATOMS), "top")
    means = {}
    for side, alpha in (("below", alpha_c - offset), ("above", alpha_c + offset)):
        spec = ExperimentSpec.from_json({
            "distribution": {str(d): q for d, q in TWO_ATOMS.items()},
            "removal": {"kind": "top", "alpha": alpha},
            "n_grid": [n],
            "replicas": replicas,
            "seed": seed,
        })
        (entry,) = run(spec, threads).deviations
        means[side] = entry["v_giant_mean"]
    return {
        "scenario": "criticality",
        "alpha_c": alpha_c,
        "v_giant_below": means["below"],
        "v_giant_above": means["above"],
        "passed": means["below"] >= 0.02 and means["above"] <= 0.005,
    }


def threshold_kill(seed, n=100_000, cutoff=LOCAL_LIMIT_CUTOFF, samples=LOCAL_LIMIT_SAMPLES):
    """Component count and giant of a degree-threshold kill against the killed local limit."""
    p = DegreeDistribution.from_mapping(THRESHOLD_LAW)
    est = local_limit_estimates(p, threshold_kill_sequence(p, THRESHOLD), cutoff, samples,
                                stream(seed, "local_limit"))
    g = sample_cm(sample_degree_sequence(p, n, stream(seed, "degrees")), stream(seed, "matching"))
    summary = components(kill_by_threshold(g, degree_centrality(g), THRESHOLD))
    count, giant = summary.component_count / n, summary.giant_vertices / n
    count_passed = abs(count - est.inv_component_mean) <= 0.01 + 3 * est.inv_component_stderr
    bound_passed = giant <= est.zeta + 0.01
    return {
        "scenario": "threshold_kill",
        "K_over_n": count,
        "inv_component_mean": est.inv_component_mean,
        "inv_component_stderr": est.inv_component_stderr,
        "v_giant": giant,
        "zeta": est.zeta,
        "count_passed": count_passed,
        "bound_passed": bound_passed,
        "passed": count_passed and bound_passed,
    }


def _killed(p, n, seed, n_index, kind, threshold, replica=0):
    degrees = sample_degree_sequence(p, n, stream(seed, "degrees", n_index, replica))
    g = sample_cm(degrees, stream(seed, "matching", n_index, replica))
    scores = degree_centrality(g) if kind == "degree" else finite_radius_pagerank(g, 0.85, 2)
    return g, kill_by_threshold(g, scores, threshold)


def _pooled_digests(p, n, replicas, seed, n_index, kind, threshold):
    """Killed 1-ball digest law over the live vertices of ``replicas`` graphs of size n."""
    counts, alive = Counter(), 0
    for replica in range(replicas):
        _, killed = _killed(p, n, seed, n_index, kind, threshold, replica)
        for digest, share in ball_digest_distribution(killed, 1).items():
            counts[digest] += share * killed.n_alive
        alive += killed.n_alive
    return {digest: c / alive for digest, c in counts.items()} if alive else {}


def local_convergence(seed, n=10_000, scale=4, pagerank_threshold=0.5, pooled=160_000):
    """Killed 1-ball digest laws at n and scale * n, plus the killed-ball consistency check.

    Each side pools about ``pooled`` vertices, so 16 graphs of size n face 4 of size scale * n by default.
    """
    p = DegreeDistribution.from_mapping(TWO_ATOMS)
    small_replicas, large_replicas = max(1, pooled // n), max(1, pooled // (scale * n))
    distances = {}
    for kind, threshold in (("degree", 2.0), ("pagerank", pagerank_threshold)):
        small = _pooled_digests(p, n, small_replicas, seed, 0, kind, threshold)
        large = _pooled_digests(p, scale * n, large_replicas, seed, 1, kind, threshold)
        distances[kind] = total_variation(small, large)
        logger.info("%s kill: total variation %.5f over %d and %d graphs", kind, distances[kind],
                    small_replicas, large_replicas)

    g, _ = _killed(p, n, seed, 0, "degree", 2.0)
    report = killed_ball_consistency_check(g, 0, 2.0, 1, rng_seed=stream(seed, "probe"))
    return {
        "scenario": "local_convergence",
        "tv_degree": distances["degree"],
        "tv_pagerank": distances["pagerank"],
        "pairs_compared": report.pairs_compared,
        "violations": report.violations,
        "passed": max(distances.values()) <= 0.02 and report.violations == 0 and report.pairs_compared >= 10_000,
    }


def matching_frequencies(seed, samples=100_000):
    """Two degree-2 vertices: one of the three matchings closes two loops."""
    rng = stream(seed, "matching")
    loops = 0
    for _ in range(samples):
        edges = sample_cm([2, 2], rng).edge_list()
        loops += int(edges[0, 0] == edges[0, 1])
    frequency = loops / samples
    return {
        "scenario": "matching_frequencies",
        "loops": frequency,
        "parallel": 1.0 - frequency,
        "passed": abs(frequency - 1 / 3) <= 0.01,
    }


SCENARIOS = {
    "giant_on_cubic": giant_on_cubic,
    "criticality": criticality,
    "threshold_kill": threshold_kill,
    "local_convergence": local_convergence,
    "matching_frequencies": matching_frequencies,
}
PARALLEL = {"giant_on_cubic", "criticality"}


def main():
    args = parse_arguments()
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format=LOG_FORMAT,
                        stream=sys.stderr)

    names = args.only or list(SCENARIOS)
    unknown = sorted(set(names) - set(SCENARIOS))
    if unknown:
        logger.error("unknown scenarios: %s", ", ".join(unknown))
        return 2

    results = []
    for name in names:
        logger.info("running %s", name)
        kwargs = {"threads": args.threads} if name in PARALLEL else {}
        result = SCENARIOS[name](args.seed, **kwargs)
        level = logging.INFO if result["passed"] else logging.ERROR
        logger.log(level, "%s: %s", name, "passed" if result["passed"] else "FAILED")
        results.append(result)

    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        with jsonlines.open(args.out, mode="a") as writer:
            writer.write_all(results)

    failed = [r["scenario"] for r in results if not r["passed"]]
    if failed:
        logger.error("failed: %s", ", ".join(failed))
        return 1
    logger.info("all %d scenarios passed", len(results))
    return 0


if __name__ == "__main__":
    sys.exit(main())
