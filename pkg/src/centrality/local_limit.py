"""
Monte Carlo over the local limit of a configuration model after a degree-threshold kill.

The root has degree D ~ p; every other vertex is reached along an edge and has
degree k with probability k p_k / E[D], of which k - 1 lead further. Killed
vertices are cut off together with everything behind them. A component is grown
generation by generation, a whole batch of roots at a time, and counted as
infinite once it holds more than ``cutoff`` vertices. The estimates are biased
upward in zeta (and downward in E[1/|C|]) by finite components larger than the
cutoff.
"""

import logging
from dataclasses import asdict, dataclass

import numpy as np

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.errors import DomainError
from src.graphs.rng import as_generator
from src.settings import LOCAL_LIMIT_BATCH_SIZE, LOCAL_LIMIT_CUTOFF, LOCAL_LIMIT_SAMPLES, MASS_TOL

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalLimitEstimate:
    zeta: float
    inv_component_mean: float
    zeta_stderr: float
    inv_component_stderr: float
    cutoff: int
    samples: int

    def to_json(self):
        return asdict(self)


def _kill_mask(p: DegreeDistribution, kill: AlphaSequence) -> np.ndarray:
    values = np.array([kill.value(int(d), 0.0) for d in p.degrees])
    if np.any((values > MASS_TOL) & (values < 1.0 - MASS_TOL)):
        raise DomainError("local-limit estimates need a 0/1 kill sequence")
    return values > 0.5


def _grow(rng, root_degrees, child_cdf, child_degrees, child_killed, cutoff):
    """Component sizes for a batch of live roots; 0 marks a component that outgrew ``cutoff``."""
    size = np.ones(root_degrees.size, dtype=np.int64)
    pending = root_degrees.astype(np.int64)
    survived = np.zeros(root_degrees.size, dtype=bool)
    while pending.any():
        owners = np.repeat(np.arange(pending.size), pending)
        picks = np.minimum(np.searchsorted(child_cdf, rng.random(owners.size), side="right"), child_cdf.size - 1)
        alive = ~child_killed[picks]
        size += np.bincount(owners[alive], minlength=pending.size)
        pending = np.bincount(owners[alive], weights=child_degrees[picks][alive] - 1,
                              minlength=pending.size).astype(np.int64)
        grown = size > cutoff
        survived |= grown
        pending[grown] = 0
    return np.where(survived, 0, size)


def local_limit_estimates(p: DegreeDistribution, kill: AlphaSequence, cutoff: int = LOCAL_LIMIT_CUTOFF,
                          samples: int = LOCAL_LIMIT_SAMPLES, rng_seed=0,
                          batch_size: int = LOCAL_LIMIT_BATCH_SIZE) -> LocalLimitEstimate:
    """Estimate zeta = P(|C(o)| = inf) and E[1/|C(o)|], a killed root contributing 0 to both."""
    if cutoff < 1 or samples < 2:
        raise DomainError(f"need cutoff >= 1 and samples >= 2, got {cutoff} and {samples}")
    rng = as_generator(rng_seed, "local_limit")
    killed = _kill_mask(p, kill)
    weights = p.degrees * p.probs
    child_cdf = np.cumsum(weights / weights.sum())

    survival = np.zeros(samples)
    inverse = np.zeros(samples)
    for start in range(0, samples, batch_size):
        stop = min(start + batch_size, samples)
        picks = rng.choice(p.degrees.size, size=stop - start, p=p.probs)
        live = ~killed[picks]
        sizes = _grow(rng, p.degrees[picks][live], child_cdf, p.degrees, killed, cutoff)
        block = np.arange(start, stop)[live]
        survival[block] = sizes == 0
        inverse[block] = np.divide(1.0, sizes, out=np.zeros(sizes.size), where=sizes > 0)
    logger.info("local limit: %d roots, cutoff %d", samples, cutoff)

    root_n = np.sqrt(samples)
    return LocalLimitEstimate(
        zeta=float(survival.mean()),
        inv_component_mean=float(inverse.mean()),
        zeta_stderr=float(survival.std(ddof=1) / root_n),
        inv_component_stderr=float(inverse.std(ddof=1) / root_n),
        cutoff=cutoff,
        samples=samples,
    )
