"""
Empirical check that strictly local killing acts locally.

If two roots have isomorphic neighbourhoods deep enough to determine every score
near them, their neighbourhoods in the killed graph must be isomorphic too. Roots
are bucketed by the digest of that deep ball and each bucket must agree on the
digest of the killed probe ball.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass

from src.centrality.ball_hash import BallHasher, sample_vertices
from src.centrality.scores import degree_centrality, finite_radius_pagerank, kill_by_threshold
from src.errors import DomainError
from src.graphs.half_edge_graph import HalfEdgeGraph
from src.settings import PAGERANK_DAMPING

logger = logging.getLogger(__name__)

KILLED_ROOT = "killed"


@dataclass(frozen=True)
class ConsistencyReport:
    sampled: int
    buckets: int
    pairs_compared: int
    violations: int

    def to_json(self):
        return asdict(self)


def _scores(g, kind, N, c):
    if kind == "degree":
        if N != 0:
            raise DomainError("degree centrality has radius 0")
        return degree_centrality(g)
    if kind == "finite_pagerank":
        return finite_radius_pagerank(g, c, N)
    raise DomainError(f"unknown strictly local measure {kind!r}")


def _pairs(m):
    return m * (m - 1) // 2


def killed_ball_consistency_check(g: HalfEdgeGraph, N: int, r: float, l: int, sample=None, rng_seed=0,
                                  kind: str = "degree", c: float = PAGERANK_DAMPING) -> ConsistencyReport:
    """Count root pairs whose conditioning balls agree but whose killed l-balls differ.

    The conditioning radius is 2N + l + 1: one step beyond 2N + l so that the
    boundary vertices carry their full degree, which every score reads.
    """
    killed = kill_by_threshold(g, _scores(g, kind, N, c), r)
    roots = sample_vertices(g, sample, rng_seed)
    deep, probe = BallHasher(g), BallHasher(killed)

    buckets = defaultdict(list)
    for v in roots.tolist():
        key = deep.digest(v, 2 * N + l + 1).digest
        buckets[key].append(probe.digest(v, l).digest if killed.vertex_alive[v] else KILLED_ROOT)

    pairs = violations = 0
    for members in buckets.values():
        together = _pairs(len(members))
        pairs += together
        violations += together - sum(_pairs(k) for k in Counter(members).values())
    if violations:
        logger.error("%d of %d root pairs break killed-ball consistency", violations, pairs)
    return ConsistencyReport(sampled=int(roots.size), buckets=len(buckets), pairs_compared=pairs,
                             violations=violations)
