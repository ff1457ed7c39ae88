"""Degree sequences drawn from a law and uniform half-edge matchings on them."""

import logging

import numpy as np

from src.degrees.distributions import DegreeDistribution
from src.errors import DomainError, ParityError
from src.graphs.half_edge_graph import HalfEdgeGraph
from src.graphs.rng import as_generator

logger = logging.getLogger(__name__)


def sample_degree_sequence(p: DegreeDistribution, n: int, rng_seed) -> np.ndarray:
    """n i.i.d. degrees from p; an odd total is repaired by adding 1 to one uniform vertex."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    rng = as_generator(rng_seed, "degrees")
    degrees = rng.choice(p.degrees, size=n, p=p.probs)
    if degrees.sum() % 2:
        v = int(rng.integers(n))
        degrees[v] += 1
        logger.debug("odd degree sum: vertex %d raised to degree %d", v, degrees[v])
    return degrees


def sample_cm(degrees, rng_seed) -> HalfEdgeGraph:
    """Uniform perfect matching: shuffle the half-edges and pair them consecutively."""
    degrees = np.asarray(degrees, dtype=np.int64)
    if np.any(degrees < 0):
        raise DomainError("degrees must be non-negative")
    total = int(degrees.sum())
    if total % 2:
        raise ParityError(f"degree sum {total} is odd")
    rng = as_generator(rng_seed, "matching")
    order = rng.permutation(total)
    matching = np.empty(total, dtype=np.int64)
    matching[order[0::2]] = order[1::2]
    matching[order[1::2]] = order[0::2]
    return HalfEdgeGraph.from_matching(degrees, matching)
