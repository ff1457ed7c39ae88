"""
Removal of degree classes on a concrete graph.

Two count conventions are supported for alpha-sequence removal: "empirical"
takes floor(n_i r_i) of the n_i vertices of degree i, "limiting" takes
floor(n p_i r_i) with the law p the graph was sampled from.
"""

import logging

import numpy as np

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.errors import DomainError, InfeasibleRemovalError
from src.graphs.half_edge_graph import HalfEdgeGraph
from src.graphs.rng import as_generator
from src.settings import FLOOR_SLACK, REMOVAL_CONVENTION

logger = logging.getLogger(__name__)

CONVENTIONS = ("empirical", "limiting")
SIDES = ("top", "bottom")


def _class_members(g: HalfEdgeGraph):
    alive = g.alive_vertices()
    degrees = g.degrees[alive]
    for d in np.unique(degrees):
        yield int(d), alive[degrees == d]


def _removal_count(degree, members, n, r, convention, p):
    value = r.value(degree, 0.0)
    if convention == "empirical":
        return int(np.floor(members.size * value + FLOOR_SLACK))
    count = int(np.floor(n * p.prob(degree) * value + FLOOR_SLACK))
    if count > members.size:
        raise InfeasibleRemovalError(
            f"limiting convention asks for {count} vertices of degree {degree} but only {members.size} exist"
        )
    return count


def removal_victims(g: HalfEdgeGraph, r: AlphaSequence, convention: str = REMOVAL_CONVENTION,
                    rng_seed=0, p: DegreeDistribution = None) -> np.ndarray:
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown removal convention {convention!r}; expected one of {CONVENTIONS}")
    if convention == "limiting" and p is None:
        raise DomainError("the limiting convention needs the degree law p")
    rng = as_generator(rng_seed, "removal")
    n = g.n_alive

    missing = []
    victims = []
    for degree, members in _class_members(g):
        if r.value(degree, -1.0) < 0:
            missing.append(degree)
        count = _removal_count(degree, members, n, r, convention, p)
        logger.debug("degree %d: removing %d of %d", degree, count, members.size)
        if count:
            victims.append(rng.choice(members, size=count, replace=False))
    if missing:
        logger.warning("no removal fraction for degrees %s; treating them as 0", missing)
    return np.concatenate(victims) if victims else np.empty(0, dtype=np.int64)


def remove_by_alpha_sequence(g: HalfEdgeGraph, r: AlphaSequence, convention: str = REMOVAL_CONVENTION,
                             rng_seed=0, p: DegreeDistribution = None) -> HalfEdgeGraph:
    return g.delete_vertices(removal_victims(g, r, convention, rng_seed, p))


def quantile_victims(g: HalfEdgeGraph, alpha: float, side: str, rng_seed=0) -> np.ndarray:
    if side not in SIDES:
        raise DomainError(f"unknown side {side!r}; expected one of {SIDES}")
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
    rng = as_generator(rng_seed, "removal")
    alive = g.alive_vertices()
    count = int(np.floor(alpha * alive.size + FLOOR_SLACK))
    # ties inside a degree class are broken by a uniform random key
    order = np.lexsort((rng.random(alive.size), g.degrees[alive]))
    chosen = order[alive.size - count:] if side == "top" else order[:count]
    return alive[chosen]


def remove_quantile_fraction(g: HalfEdgeGraph, alpha: float, side: str, rng_seed=0) -> HalfEdgeGraph:
    return g.delete_vertices(quantile_victims(g, alpha, side, rng_seed))


def empirical_alpha_sequence(g: HalfEdgeGraph, r: AlphaSequence) -> AlphaSequence:
    """floor(n_i r_i) / n_i per degree class present: the fractions the empirical convention applies."""
    degrees, values = [], []
    for degree, members in _class_members(g):
        degrees.append(degree)
        values.append(np.floor(members.size * r.value(degree, 0.0) + FLOOR_SLACK) / members.size)
    return AlphaSequence(np.array(degrees, dtype=np.int64), np.array(values))
