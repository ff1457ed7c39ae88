"""
Side-by-side comparison of alpha-sequences of equal mass.

All sequences are applied to the same sampled graphs, with the same removal
streams, so identical sequences give identical rows.
"""

import logging
import multiprocessing
from dataclasses import asdict, dataclass, field

import numpy as np

from src.degrees.distributions import AlphaSequence, DegreeDistribution, alpha_of
from src.degrees.dominance import dominates
from src.errors import DomainError
from src.graphs.components import components
from src.graphs.removal import remove_by_alpha_sequence
from src.graphs.rng import stream
from src.graphs.sampling import sample_cm, sample_degree_sequence
from src.settings import ASSERTION_TOL, DEFAULT_SEED, REMOVAL_CONVENTION
from src.theory.fixed_point import giant_fractions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComparisonRow:
    index: int
    label: str
    alpha: float
    nu_r: float
    rho: float
    e: float
    v_giant_mean: float
    e_giant_mean: float


@dataclass(frozen=True)
class ComparisonTable:
    rows: list
    failures: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_json(self):
        return {"rows": [asdict(row) for row in self.rows], "failures": self.failures, "holds": self.holds}


def compare_replica(task):
    """Module-level worker: one sampled graph, every sequence applied to it; [(v/n, e/n)] per sequence."""
    p, sequences, n, seed, replica, convention = task
    degrees = sample_degree_sequence(p, n, stream(seed, "degrees", 0, replica))
    g = sample_cm(degrees, stream(seed, "matching", 0, replica))
    out = []
    for r in sequences:
        summary = components(remove_by_alpha_sequence(g, r, convention, stream(seed, "removal", 0, replica), p))
        out.append((summary.giant_vertices / n, summary.giant_edges / n))
    return out


def compare_sequences(p: DegreeDistribution, sequences, n: int, replicas: int = 1, seed: int = DEFAULT_SEED,
                      labels=None, convention: str = REMOVAL_CONVENTION, tol: float = ASSERTION_TOL,
                      threads: int = 1) -> ComparisonTable:
    sequences = list(sequences)
    labels = list(labels) if labels is not None else [str(i) for i in range(len(sequences))]
    alphas = [alpha_of(p, r) for r in sequences]
    if alphas and max(alphas) - min(alphas) > tol:
        raise DomainError(f"sequences carry different alpha: {alphas}")

    tasks = [(p, sequences, n, seed, replica, convention) for replica in range(replicas)]
    if threads > 1:
        with multiprocessing.Pool(processes=threads) as pool:
            measured = np.array(list(pool.imap(compare_replica, tasks)))
    else:
        measured = np.array([compare_replica(task) for task in tasks])

    rows = []
    for i, (label, r) in enumerate(zip(labels, sequences)):
        theory = giant_fractions(p, r)
        v, e = measured[:, i, 0], measured[:, i, 1]
        rows.append(ComparisonRow(index=i, label=label, alpha=alphas[i], nu_r=theory.nu_r, rho=theory.rho,
                                  e=theory.e, v_giant_mean=float(np.mean(v)), e_giant_mean=float(np.mean(e))))

    # the more dominant removal may not leave a larger giant
    failures = []
    for a, b in ((a, b) for a in range(len(sequences)) for b in range(len(sequences)) if a != b):
        if not dominates(p, sequences[a], sequences[b]):
            continue
        if rows[b].rho > rows[a].rho + tol or rows[b].e > rows[a].e + tol:
            failures.append({"lower": labels[a], "upper": labels[b], "rho": [rows[a].rho, rows[b].rho],
                             "e": [rows[a].e, rows[b].e]})
            logger.error("%s is dominated by %s but leaves a smaller giant", labels[a], labels[b])

    rows.sort(key=lambda row: (row.rho, row.e, row.index))
    return ComparisonTable(rows=rows, failures=failures)
