"""
Strictly local centrality scores and the threshold kill they induce.

Scores live on vertex ids (dead vertices score 0). finite_radius_pagerank is
graph-normalised: n times the truncated PageRank vector, so a d-regular graph
scores 1 - c^(N+1) everywhere.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.errors import DomainError
from src.graphs.half_edge_graph import HalfEdgeGraph
from src.graphs.rng import as_generator
from src.settings import PAGERANK_DAMPING, PAGERANK_RADIUS

logger = logging.getLogger(__name__)

KINDS = ("degree", "degree_rank", "finite_pagerank")


@dataclass(frozen=True, eq=False)
class CentralityScores:
    values: np.ndarray
    radius: int
    kind: str


def degree_centrality(g: HalfEdgeGraph) -> CentralityScores:
    values = np.where(g.vertex_alive, g.degrees, 0).astype(np.float64)
    return CentralityScores(values=values, radius=0, kind="degree")


def degree_rank_centrality(g: HalfEdgeGraph, rng_seed=0) -> CentralityScores:
    """rank / n by degree, ties broken by a uniform random permutation."""
    rng = as_generator(rng_seed, "centrality")
    alive = g.alive_vertices()
    values = np.zeros(g.size)
    if alive.size:
        order = np.lexsort((rng.random(alive.size), g.degrees[alive]))
        values[alive[order]] = np.arange(1, alive.size + 1) / alive.size
    return CentralityScores(values=values, radius=0, kind="degree_rank")


def transition_matrix(g: HalfEdgeGraph) -> sparse.csr_matrix:
    """p_ij = e_ij / d_i; a vertex of degree 0 keeps the walk in place."""
    adjacency = g.adjacency()
    degrees = np.asarray(adjacency.sum(axis=1)).ravel()
    isolated = degrees == 0
    inverse = np.divide(1.0, degrees, out=np.zeros_like(degrees), where=~isolated)
    walk = sparse.diags(inverse) @ adjacency
    return (walk + sparse.diags(isolated.astype(np.float64))).tocsr()


def finite_radius_pagerank(g: HalfEdgeGraph, c: float = PAGERANK_DAMPING, N: int = PAGERANK_RADIUS) -> CentralityScores:
    if N < 0:
        raise DomainError(f"radius must be non-negative, got {N}")
    if not 0.0 < c < 1.0:
        raise DomainError(f"damping must lie in (0, 1), got {c!r}")
    transposed = transition_matrix(g).T.tocsr()
    x = np.ones(g.size)
    total = x.copy()
    weight = 1.0
    for _ in range(N):
        x = transposed @ x
        weight *= c
        total += weight * x
    values = np.where(g.vertex_alive, (1.0 - c) * total, 0.0)
    return CentralityScores(values=values, radius=N, kind="finite_pagerank")


def kill_by_threshold(g: HalfEdgeGraph, scores: CentralityScores, r: float) -> HalfEdgeGraph:
    """The r-killed graph: every live vertex scoring strictly above r is deleted."""
    doomed = np.flatnonzero(g.vertex_alive & (scores.values > r))
    logger.debug("threshold %.6g kills %d of %d vertices", r, doomed.size, g.n_alive)
    return g.delete_vertices(doomed)


def threshold_kill_sequence(p: DegreeDistribution, threshold: float) -> AlphaSequence:
    """0/1 alpha-sequence removing every degree strictly above ``threshold``."""
    return AlphaSequence(p.degrees, (p.degrees > threshold).astype(np.float64))
