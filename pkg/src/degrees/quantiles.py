"""Top and bottom degree-quantile alpha-sequences."""

import numpy as np

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.errors import DomainError
from src.settings import MASS_TOL


def _check_alpha(alpha):
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")


def top_quantile_sequence(p: DegreeDistribution, alpha: float):
    """Remove all vertices above k_alpha and the needed fraction of class k_alpha.

    k_alpha satisfies P(D > k) < alpha <= P(D >= k). Returns (r, k_alpha).
    """
    _check_alpha(alpha)
    probs = p.probs
    at_least = np.cumsum(probs[::-1])[::-1]
    candidates = np.flatnonzero((probs > 0) & (at_least >= alpha - MASS_TOL))
    idx = int(candidates[-1])
    above = float(at_least[idx + 1]) if idx + 1 < probs.size else 0.0
    values = np.zeros(probs.shape)
    values[idx + 1:] = 1.0
    values[idx] = min(max((alpha - above) / probs[idx], 0.0), 1.0)
    return AlphaSequence(p.degrees, values), int(p.degrees[idx])


def bottom_quantile_sequence(p: DegreeDistribution, alpha: float):
    """Remove all vertices below l_alpha and the needed fraction of class l_alpha.

    l_alpha satisfies P(D < l) < alpha <= P(D <= l). Returns (r, l_alpha).
    """
    _check_alpha(alpha)
    probs = p.probs
    at_most = np.cumsum(probs)
    candidates = np.flatnonzero((probs > 0) & (at_most >= alpha - MASS_TOL))
    idx = int(candidates[0])
    below = float(at_most[idx - 1]) if idx > 0 else 0.0
    values = np.zeros(probs.shape)
    values[:idx] = 1.0
    values[idx] = min(max((alpha - below) / probs[idx], 0.0), 1.0)
    return AlphaSequence(p.degrees, values), int(p.degrees[idx])
