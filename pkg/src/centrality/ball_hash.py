"""
Refinement hashing of rooted balls.

Vertices start from (distance to root, degree inside the ball) and are relabelled
radius times from the sorted multiset of their neighbours' labels. An edge belongs
to the radius-R ball when one endpoint is at distance < R, so radius 0 is a lone
root. Isomorphic rooted balls always get equal digests; the converse only holds
on trees.
"""

import hashlib
from collections import Counter
from dataclasses import dataclass

import numpy as np

from src.errors import DomainError
from src.graphs.half_edge_graph import HalfEdgeGraph
from src.graphs.rng import as_generator


def _digest(obj) -> str:
    return hashlib.sha256(repr(obj).encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class BallHash:
    digest: str
    radius: int


class BallHasher:
    """Caches the adjacency of one graph so many roots can be hashed cheaply."""

    def __init__(self, g: HalfEdgeGraph):
        adjacency = g.adjacency()
        self.indptr = adjacency.indptr
        self.indices = adjacency.indices
        self.counts = adjacency.data.astype(np.int64)

    def neighbours(self, u):
        lo, hi = self.indptr[u], self.indptr[u + 1]
        return zip(self.indices[lo:hi].tolist(), self.counts[lo:hi].tolist())

    def digest(self, v: int, radius: int) -> BallHash:
        if radius < 0:
            raise DomainError(f"radius must be non-negative, got {radius}")
        dist = {v: 0}
        frontier = [v]
        for depth in range(1, radius + 1):
            nxt = []
            for u in frontier:
                for w, _ in self.neighbours(u):
                    if w not in dist:
                        dist[w] = depth
                        nxt.append(w)
            frontier = nxt

        adjacent = {u: [] for u in dist}
        for u, du in dist.items():
            if du >= radius:
                continue
            for w, m in self.neighbours(u):
                adjacent[u].append((w, m))
                if dist[w] >= radius:
                    adjacent[w].append((u, m))

        labels = {u: _digest((dist[u], sum(m for _, m in nbrs))) for u, nbrs in adjacent.items()}
        for _ in range(radius):
            labels = {
                u: _digest((labels[u], sorted((labels[w], m) for w, m in adjacent[u])))
                for u in adjacent
            }
        return BallHash(digest=_digest((labels[v], sorted(labels.values()))), radius=radius)


def ball_hash(g: HalfEdgeGraph, v: int, radius: int) -> BallHash:
    return BallHasher(g).digest(v, radius)


def sample_vertices(g: HalfEdgeGraph, sample, rng_seed) -> np.ndarray:
    alive = g.alive_vertices()
    if sample is None or sample >= alive.size:
        return alive
    rng = as_generator(rng_seed, "probe")
    return np.sort(rng.choice(alive, size=sample, replace=False))


def ball_digest_distribution(g: HalfEdgeGraph, radius: int, sample=None, rng_seed=0) -> dict:
    """Empirical law of the radius-ball digest of a uniform live vertex."""
    roots = sample_vertices(g, sample, rng_seed)
    if roots.size == 0:
        return {}
    hasher = BallHasher(g)
    counts = Counter(hasher.digest(int(v), radius).digest for v in roots)
    return {digest: c / roots.size for digest, c in counts.items()}


def total_variation(a: dict, b: dict) -> float:
    return 0.5 * sum(abs(a.get(k, 0.0) - b.get(k, 0.0)) for k in set(a) | set(b))
