"""
Seeded simulation runs: sample, remove, measure, and set against the theory.

Every (n, replica) pair draws from its own random streams, so the rows of a run
do not depend on how many worker processes execute it.
"""

import json
import logging
import multiprocessing
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from src.centrality.scores import finite_radius_pagerank, kill_by_threshold
from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.degrees.json_io import alpha_sequence_from_json, distribution_from_json
from src.errors import DomainError, InvalidDistributionError
from src.graphs.components import components
from src.graphs.removal import CONVENTIONS, remove_by_alpha_sequence, remove_quantile_fraction
from src.graphs.rng import stream
from src.graphs.sampling import sample_cm, sample_degree_sequence
from src.settings import DEFAULT_SEED, DEFAULT_THREADS, PAGERANK_DAMPING, PAGERANK_RADIUS, REMOVAL_CONVENTION
from src.theory.critical import removal_sequence
from src.theory.fixed_point import TheoryReport, giant_fractions

logger = logging.getLogger(__name__)

REMOVAL_KINDS = ("alpha_sequence", "top", "bottom", "uniform", "pagerank")


@dataclass(frozen=True)
class Removal:
    kind: str
    alpha: Optional[float] = None
    r: Optional[AlphaSequence] = None
    c: float = PAGERANK_DAMPING
    radius: int = PAGERANK_RADIUS
    threshold: Optional[float] = None

    @classmethod
    def from_json(cls, obj) -> "Removal":
        kind = obj.get("kind")
        if kind not in REMOVAL_KINDS:
            raise DomainError(f"removal kind {kind!r} is not one of {REMOVAL_KINDS}")
        if kind == "alpha_sequence":
            return cls(kind=kind, r=alpha_sequence_from_json(obj["r"]))
        if kind == "pagerank":
            return cls(kind=kind, c=float(obj.get("c", PAGERANK_DAMPING)),
                       radius=int(obj.get("radius", PAGERANK_RADIUS)), threshold=float(obj["threshold"]))
        alpha = float(obj["alpha"])
        if not 0.0 <= alpha <= 1.0:
            raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
        return cls(kind=kind, alpha=alpha)

    def to_json(self):
        if self.kind == "alpha_sequence":
            return {"kind": self.kind, "r": {str(d): v for d, v in self.r.mass.items()}}
        if self.kind == "pagerank":
            return {"kind": self.kind, "c": self.c, "radius": self.radius, "threshold": self.threshold}
        return {"kind": self.kind, "alpha": self.alpha}

    def sequence(self, p: DegreeDistribution) -> Optional[AlphaSequence]:
        """The alpha-sequence the theory should use, or None for non-degree removal."""
        if self.kind == "alpha_sequence":
            return self.r
        if self.kind == "pagerank":
            return None
        return removal_sequence(p, self.kind, self.alpha)


@dataclass(frozen=True)
class ExperimentSpec:
    distribution: DegreeDistribution
    removal: Removal
    n_grid: tuple
    replicas: int = 1
    seed: int = DEFAULT_SEED
    convention: str = REMOVAL_CONVENTION
    threads: int = DEFAULT_THREADS
    outputs: dict = field(default_factory=dict)

    def __post_init__(self):
        grid = tuple(int(n) for n in self.n_grid)
        if not grid or any(b <= a for a, b in zip(grid, grid[1:])):
            raise DomainError(f"n_grid must be non-empty and strictly increasing, got {list(grid)}")
        if grid[0] < 2:
            raise DomainError("every n must be at least 2")
        if self.replicas < 1:
            raise DomainError(f"replicas must be >= 1, got {self.replicas}")
        if self.convention not in CONVENTIONS:
            raise DomainError(f"unknown removal convention {self.convention!r}")
        object.__setattr__(self, "n_grid", grid)

    @classmethod
    def from_json(cls, obj) -> "ExperimentSpec":
        try:
            return cls(
                distribution=distribution_from_json(obj["distribution"]),
                removal=Removal.from_json(obj["removal"]),
                n_grid=obj["n_grid"],
                replicas=int(obj.get("replicas", 1)),
                seed=int(obj.get("seed", DEFAULT_SEED)),
                convention=obj.get("convention", REMOVAL_CONVENTION),
                threads=int(obj.get("threads", DEFAULT_THREADS)),
                outputs=dict(obj.get("outputs", {})),
            )
        except KeyError as e:
            raise InvalidDistributionError(f"experiment spec is missing {e}") from e

    @classmethod
    def load(cls, path) -> "ExperimentSpec":
        with open(Path(path)) as f:
            return cls.from_json(json.load(f))

    def to_json(self):
        return {
            "distribution": {str(d): v for d, v in self.distribution.mass.items()},
            "removal": self.removal.to_json(),
            "n_grid": list(self.n_grid),
            "replicas": self.replicas,
            "seed": self.seed,
            "convention": self.convention,
        }


@dataclass(frozen=True)
class ReplicaRow:
    n: int
    replica: int
    seed: int
    alpha: float
    K: int
    v_giant: int
    e_giant: int
    giant_per_degree: dict

    def to_json(self):
        return {
            "n": self.n,
            "replica": self.replica,
            "seed": self.seed,
            "alpha": self.alpha,
            "K": self.K,
            "v_giant": self.v_giant,
            "e_giant": self.e_giant,
            "giant_per_degree": {str(d): c for d, c in sorted(self.giant_per_degree.items())},
        }


@dataclass(frozen=True)
class RunReport:
    spec: ExperimentSpec
    rows: list
    theory: Optional[TheoryReport]
    deviations: list

    def to_json(self):
        return {
            "spec": self.spec.to_json(),
            "theory": self.theory.to_json() if self.theory is not None else None,
            "deviations": self.deviations,
        }


def run_replica(task) -> ReplicaRow:
    """Module-level worker: one sampled graph, one removal, one component count."""
    spec, n_index, n, replica = task
    p, removal = spec.distribution, spec.removal
    degrees = sample_degree_sequence(p, n, stream(spec.seed, "degrees", n_index, replica))
    g = sample_cm(degrees, stream(spec.seed, "matching", n_index, replica))
    removal_rng = stream(spec.seed, "removal", n_index, replica)

    if removal.kind in ("top", "bottom"):
        g = remove_quantile_fraction(g, removal.alpha, removal.kind, removal_rng)
    elif removal.kind == "pagerank":
        g = kill_by_threshold(g, finite_radius_pagerank(g, removal.c, removal.radius), removal.threshold)
    elif removal.kind == "uniform":
        present = np.unique(degrees)
        r = AlphaSequence(present, np.full(present.size, removal.alpha))
        g = remove_by_alpha_sequence(g, r, spec.convention, removal_rng, p)
    else:
        g = remove_by_alpha_sequence(g, removal.sequence(p), spec.convention, removal_rng, p)

    summary = components(g)
    return ReplicaRow(
        n=n,
        replica=replica,
        seed=spec.seed,
        alpha=1.0 - g.n_alive / n,
        K=summary.component_count,
        v_giant=summary.giant_vertices,
        e_giant=summary.giant_edges,
        giant_per_degree=summary.giant_per_degree,
    )


def _stderr(values):
    return float(np.std(values, ddof=1) / np.sqrt(values.size)) if values.size > 1 else 0.0


def sweep(rows, theory: Optional[TheoryReport] = None) -> list:
    """Per-n means and standard errors of v/n, e/n and K/n, with the gap to the theory."""
    summary = []
    for n in sorted({row.n for row in rows}):
        batch = [row for row in rows if row.n == n]
        v = np.array([row.v_giant / n for row in batch])
        e = np.array([row.e_giant / n for row in batch])
        k = np.array([row.K / n for row in batch])
        entry = {
            "n": n,
            "replicas": len(batch),
            "v_giant_mean": float(v.mean()),
            "v_giant_stderr": _stderr(v),
            "e_giant_mean": float(e.mean()),
            "e_giant_stderr": _stderr(e),
            "K_mean": float(k.mean()),
            "K_stderr": _stderr(k),
        }
        if theory is not None:
            entry["rho_gap"] = abs(entry["v_giant_mean"] - theory.rho)
            entry["e_gap"] = abs(entry["e_giant_mean"] - theory.e)
        summary.append(entry)
    return summary


def run(spec: ExperimentSpec, threads: Optional[int] = None) -> RunReport:
    threads = spec.threads if threads is None else threads
    tasks = [(spec, i, n, replica) for i, n in enumerate(spec.n_grid) for replica in range(spec.replicas)]
    logger.info("running %d replicas over n in %s with %d worker(s)", len(tasks), list(spec.n_grid), threads)

    if threads > 1:
        with multiprocessing.Pool(processes=threads) as pool:
            rows = list(pool.imap(run_replica, tasks))
    else:
        rows = [run_replica(task) for task in tasks]

    sequence = spec.removal.sequence(spec.distribution)
    theory = giant_fractions(spec.distribution, sequence) if sequence is not None else None
    deviations = sweep(rows, theory)
    for entry in deviations:
        logger.info("n=%d: v/n=%.6f e/n=%.6f K/n=%.6f", entry["n"], entry["v_giant_mean"],
                    entry["e_giant_mean"], entry["K_mean"])
    return RunReport(spec=spec, rows=rows, theory=theory, deviations=deviations)
