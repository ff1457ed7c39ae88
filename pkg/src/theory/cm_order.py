"""Giant size of the unremoved configuration model is monotone in the stochastic order of the degree law."""

import logging
from dataclasses import dataclass, field

from src.degrees.distributions import DegreeDistribution, FiniteMeasure
from src.degrees.dominance import measure_dominates
from src.degrees.transforms import MeasureTransform
from src.settings import ASSERTION_TOL
from src.theory.fixed_point import janson_luczak

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CmOrderComparison:
    dominated: bool
    rho_p: float
    rho_q: float
    holds: bool
    chain: list = field(default_factory=list)

    def to_json(self):
        return {
            "dominated": self.dominated,
            "rho_p": self.rho_p,
            "rho_q": self.rho_q,
            "holds": self.holds,
            "chain": [t.to_json() for t in self.chain],
        }


def measure_chain(p: DegreeDistribution, q: DegreeDistribution) -> list:
    """MeasureTransforms taking p to q when p is stochastically below q."""
    moves = FiniteMeasure.of(p).transport_to(FiniteMeasure.of(q))
    return [MeasureTransform(k=giver, l=receiver - giver, eps=amount) for giver, receiver, amount in moves]


def cm_order_compare(p: DegreeDistribution, q: DegreeDistribution, tol: float = ASSERTION_TOL) -> CmOrderComparison:
    dominated = measure_dominates(FiniteMeasure.of(p), FiniteMeasure.of(q))
    rho_p, rho_q = janson_luczak(p).rho, janson_luczak(q).rho
    if not dominated:
        return CmOrderComparison(dominated=False, rho_p=rho_p, rho_q=rho_q, holds=True)

    holds = rho_p <= rho_q + tol
    if not holds:
        logger.error("p is below q in the stochastic order but rho_p=%.12g > rho_q=%.12g", rho_p, rho_q)
    return CmOrderComparison(dominated=True, rho_p=rho_p, rho_q=rho_q, holds=holds, chain=measure_chain(p, q))
