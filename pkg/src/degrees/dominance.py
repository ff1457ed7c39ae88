"""
Stochastic ordering of alpha-sequences and its decomposition into epsilon-transformations.

r <=_p r2 means that the removal measure p*r2 puts at least as much mass as p*r
on every upper tail {j >= K}.
"""

import logging

import numpy as np

from src.degrees.distributions import AlphaSequence, DegreeDistribution, FiniteMeasure, alpha_of
from src.degrees.transforms import EpsilonTransform
from src.errors import DomainError, OrderingError
from src.settings import MASS_TOL

logger = logging.getLogger(__name__)


def tail_violation(lower: FiniteMeasure, upper: FiniteMeasure, tol: float = MASS_TOL):
    """Smallest degree K with lower([K, inf)) > upper([K, inf)) + tol, or None."""
    degrees = np.union1d(lower.degrees, upper.degrees)
    if degrees.size == 0:
        return None
    failing = np.flatnonzero(lower.tails(degrees) > upper.tails(degrees) + tol)
    return int(degrees[failing[0]]) if failing.size else None


def measure_dominates(lower: FiniteMeasure, upper: FiniteMeasure, tol: float = MASS_TOL) -> bool:
    return tail_violation(lower, upper, tol) is None


def first_tail_violation(p: DegreeDistribution, r: AlphaSequence, r2: AlphaSequence, tol: float = MASS_TOL):
    return tail_violation(FiniteMeasure.of(p, r), FiniteMeasure.of(p, r2), tol)


def dominates(p: DegreeDistribution, r: AlphaSequence, r2: AlphaSequence, tol: float = MASS_TOL) -> bool:
    """True iff r <=_p r2, i.e. r2 stochastically dominates r."""
    return first_tail_violation(p, r, r2, tol) is None


def decompose_to_transforms(p: DegreeDistribution, r: AlphaSequence, r2: AlphaSequence,
                            tol: float = MASS_TOL) -> list:
    """Epsilon-transformations taking r to r2, for r2 <=_p r with equal alpha.

    Removal mass only moves down. Moves are paired by the monotone coupling of the
    surplus of p*r with its deficit against p*r2 and emitted in increasing order of
    the receiving degree.
    """
    q, q2 = FiniteMeasure.of(p, r), FiniteMeasure.of(p, r2)
    index = tail_violation(q2, q, tol)
    if index is not None:
        raise OrderingError(f"target does not lie below the source: tail at degree {index} grows", index=index)
    if abs(q.total - q2.total) > tol:
        raise OrderingError(f"alpha differs: {q.total!r} vs {q2.total!r}")

    transforms = []
    for giver, receiver, amount in q.transport_to(q2, tol):
        if giver <= receiver:
            raise OrderingError(f"mass would move up from {giver} to {receiver}", index=giver)
        transforms.append(EpsilonTransform(k=receiver, l=giver - receiver, eps=amount))
    logger.debug("decomposed into %d transforms", len(transforms))
    return transforms


def dominating_delta(p: DegreeDistribution, r: AlphaSequence, r2: AlphaSequence,
                     tol: float = MASS_TOL) -> AlphaSequence:
    """Extra removal delta of mass alpha(r2) - alpha(r) with r + delta <=_p r2.

    Scans degrees upward. Where r2 >= r outside a deficit stretch, delta tops r up
    to r2. A degree with r2 < r opens a stretch whose running sum of p(r2 - r) is
    carried forward; the degree at which it turns positive receives exactly that
    positive remainder and closes the stretch.
    """
    eps = alpha_of(p, r2) - alpha_of(p, r)
    if eps < -tol:
        raise DomainError(f"target mass is smaller than the source mass by {-eps!r}")
    index = first_tail_violation(p, r, r2, tol)
    if index is not None:
        raise OrderingError(f"target does not dominate the source: tail at degree {index}", index=index)

    base, target = r.aligned(p), r2.aligned(p)
    delta = np.zeros(base.shape)
    running = None
    for i, mass in enumerate(p.probs):
        if mass <= 0:
            continue
        gap = target[i] - base[i]
        if running is None:
            if gap < 0:
                running = mass * gap
            else:
                delta[i] = gap
            continue
        running += mass * gap
        if running > 0:
            delta[i] = min(running / mass, 1.0 - base[i])
            running = None

    return AlphaSequence(p.degrees, delta)


def general_comparison_chain(p: DegreeDistribution, r: AlphaSequence, r2: AlphaSequence,
                             tol: float = MASS_TOL):
    """For r <=_p r2 with alpha(r2) >= alpha(r): (delta, transforms taking r2 down to r + delta)."""
    delta = dominating_delta(p, r, r2, tol)
    lifted = AlphaSequence(p.degrees, np.clip(r.aligned(p) + delta.values, 0.0, 1.0))
    return delta, decompose_to_transforms(p, r2, lifted, tol)
