"""
Vertex explosion: a vertex of degree d becomes d red vertices of degree 1.

The matching is untouched, so exploding the removed vertices of a configuration
model gives again a configuration model, on the exploded degree sequence.
"""

from dataclasses import dataclass

import numpy as np

from src.errors import GraphInvariantError
from src.graphs.half_edge_graph import RED, HalfEdgeGraph


@dataclass(frozen=True)
class ExplodedCounts:
    n_tilde: int
    n_plus: int
    per_degree: dict


def exploded_counts(g: HalfEdgeGraph, victims) -> ExplodedCounts:
    """Vertex counts that exploding ``victims`` in ``g`` must produce."""
    victims = np.unique(np.asarray(list(victims), dtype=np.int64))
    victims = victims[g.vertex_alive[victims]]
    degrees = g.degrees
    lost = degrees[victims]
    n_plus = int(lost.sum())

    per_degree = dict(g.degree_counts())
    for d, c in zip(*np.unique(lost, return_counts=True)):
        per_degree[int(d)] -= int(c)
    per_degree[1] = per_degree.get(1, 0) + n_plus
    per_degree = {d: c for d, c in sorted(per_degree.items()) if c}
    return ExplodedCounts(n_tilde=g.n_alive + int((lost - 1).sum()), n_plus=n_plus, per_degree=per_degree)


def explode_vertices(g: HalfEdgeGraph, victims) -> HalfEdgeGraph:
    """Each victim keeps its first live half-edge and turns red; the others go to fresh red ids.

    A victim of degree 0 has nothing to explode into and is tombstoned. Dead victims are skipped.
    """
    victims = np.unique(np.asarray(list(victims), dtype=np.int64))
    victims = victims[g.vertex_alive[victims]]
    out = g.copy()
    if victims.size == 0:
        return out

    degrees = g.degrees
    isolated = victims[degrees[victims] == 0]
    out.vertex_alive[isolated] = False
    out.labels[victims[degrees[victims] > 0]] = RED

    halves = np.flatnonzero(out.edge_alive & np.isin(out.owner, victims))
    halves = halves[np.argsort(out.owner[halves], kind="stable")]
    owners = out.owner[halves]
    first = np.ones(halves.size, dtype=bool)
    first[1:] = owners[1:] != owners[:-1]
    extra = halves[~first]

    out.owner[extra] = g.size + np.arange(extra.size, dtype=np.int64)
    out.vertex_alive = np.concatenate([out.vertex_alive, np.ones(extra.size, dtype=bool)])
    out.labels = np.concatenate([out.labels, np.full(extra.size, RED, dtype=np.int8)])
    return out


def strip_red(g: HalfEdgeGraph) -> HalfEdgeGraph:
    red = np.flatnonzero(g.vertex_alive & (g.labels == RED))
    bad = red[g.degrees[red] != 1]
    if bad.size:
        raise GraphInvariantError(f"red vertex {int(bad[0])} has degree {int(g.degrees[bad[0]])}, expected 1")
    return g.delete_vertices(red)
