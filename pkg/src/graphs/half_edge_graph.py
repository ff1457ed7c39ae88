"""
Multigraphs stored as matched half-edges.

Vertex ids are never reused or compacted: deleting a vertex tombstones it and
kills its half-edges together with their partners. Degrees are always counted
over live half-edges, so a self-loop contributes 2.
"""

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from src.errors import GraphInvariantError

NORMAL = 0
RED = 1
LABEL_NAMES = {NORMAL: "normal", RED: "red"}


@dataclass(eq=False)
class HalfEdgeGraph:
    owner: np.ndarray
    matching: np.ndarray
    edge_alive: np.ndarray
    vertex_alive: np.ndarray
    labels: np.ndarray

    @classmethod
    def from_matching(cls, degrees, matching) -> "HalfEdgeGraph":
        degrees = np.asarray(degrees, dtype=np.int64)
        matching = np.asarray(matching, dtype=np.int64)
        n = degrees.size
        owner = np.repeat(np.arange(n, dtype=np.int64), degrees)
        if matching.shape != owner.shape:
            raise GraphInvariantError(f"{matching.size} matched half-edges for a degree sum of {owner.size}")
        g = cls(
            owner=owner,
            matching=matching,
            edge_alive=np.ones(owner.size, dtype=bool),
            vertex_alive=np.ones(n, dtype=bool),
            labels=np.full(n, NORMAL, dtype=np.int8),
        )
        g.validate()
        return g

    @classmethod
    def from_edges(cls, n: int, edges) -> "HalfEdgeGraph":
        """Graph on vertices 0..n-1 whose i-th edge is half-edges 2i and 2i+1."""
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        owner = edges.reshape(-1)
        halves = np.arange(owner.size, dtype=np.int64)
        g = cls(
            owner=owner,
            matching=halves ^ 1,
            edge_alive=np.ones(owner.size, dtype=bool),
            vertex_alive=np.ones(n, dtype=bool),
            labels=np.full(n, NORMAL, dtype=np.int8),
        )
        g.validate()
        return g

    def validate(self):
        h = self.matching.size
        if h and (self.matching.min() < 0 or self.matching.max() >= h):
            raise GraphInvariantError("matching refers to a half-edge that does not exist")
        halves = np.arange(h)
        if np.any(self.matching[self.matching] != halves) or np.any(self.matching == halves):
            raise GraphInvariantError("matching is not a fixed-point-free involution")
        if np.any(self.edge_alive != self.edge_alive[self.matching]):
            raise GraphInvariantError("a live half-edge is matched to a dead one")
        if h and self.owner.max() >= self.vertex_alive.size:
            raise GraphInvariantError("half-edge owned by an unknown vertex")

    def copy(self) -> "HalfEdgeGraph":
        return HalfEdgeGraph(
            owner=self.owner.copy(),
            matching=self.matching.copy(),
            edge_alive=self.edge_alive.copy(),
            vertex_alive=self.vertex_alive.copy(),
            labels=self.labels.copy(),
        )

    @property
    def size(self) -> int:
        """Number of vertex ids, dead ones included."""
        return int(self.vertex_alive.size)

    @property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.owner[self.edge_alive], minlength=self.size)

    @property
    def n_alive(self) -> int:
        return int(self.vertex_alive.sum())

    @property
    def n_edges(self) -> int:
        return int(self.edge_alive.sum()) // 2

    def alive_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.vertex_alive)

    def degree_counts(self) -> dict:
        """{degree: number of live vertices with that degree}."""
        values, counts = np.unique(self.degrees[self.vertex_alive], return_counts=True)
        return {int(d): int(c) for d, c in zip(values, counts)}

    def edge_list(self) -> np.ndarray:
        """(m, 2) array of live edges, one row per matched pair."""
        halves = np.flatnonzero(self.edge_alive & (np.arange(self.matching.size) < self.matching))
        return np.column_stack([self.owner[halves], self.owner[self.matching[halves]]])

    def canonical_edges(self) -> list:
        """Sorted (min, max) endpoint pairs with multiplicity."""
        edges = np.sort(self.edge_list(), axis=1)
        return sorted(map(tuple, edges.tolist()))

    def adjacency(self) -> sparse.csr_matrix:
        """e_ij counts with a self-loop contributing 2 to e_ii."""
        edges = self.edge_list()
        rows = np.concatenate([edges[:, 0], edges[:, 1]])
        cols = np.concatenate([edges[:, 1], edges[:, 0]])
        data = np.ones(rows.size, dtype=np.float64)
        return sparse.csr_matrix((data, (rows, cols)), shape=(self.size, self.size))

    def delete_vertices(self, ids) -> "HalfEdgeGraph":
        ids = np.asarray(list(ids) if not isinstance(ids, np.ndarray) else ids, dtype=np.int64)
        g = self.copy()
        if ids.size == 0:
            return g
        g.vertex_alive[ids] = False
        doomed = np.flatnonzero(np.isin(g.owner, ids) & g.edge_alive)
        g.edge_alive[doomed] = False
        g.edge_alive[g.matching[doomed]] = False
        return g

    def dump(self, f):
        """Write ``v <id> <degree> <label>`` lines for live vertices, then ``e <u> <v>`` per edge."""
        degrees = self.degrees
        for v in self.alive_vertices():
            f.write(f"v {v} {degrees[v]} {LABEL_NAMES[int(self.labels[v])]}\n")
        for u, v in self.edge_list():
            f.write(f"e {u} {v}\n")

    def __repr__(self):
        return f"HalfEdgeGraph(n_alive={self.n_alive}, n_edges={self.n_edges})"
