"""Connected components of the live part of a graph, via union-find over matched pairs."""

from dataclasses import dataclass, field

import numpy as np

from src.graphs.half_edge_graph import HalfEdgeGraph


class UnionFind:
    """Disjoint sets over 0..size-1 with path compression."""

    def __init__(self, size):
        self.size = size
        self.parents = list(range(size))
        self.num_components = size

    def find(self, elem):
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        while elem != root:
            parent = self.parents[elem]
            self.parents[elem] = root
            elem = parent
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # smaller root wins so that the representative is the smallest id seen
        if rb < ra:
            ra, rb = rb, ra
        self.parents[rb] = ra
        self.num_components -= 1


@dataclass(frozen=True)
class ComponentSummary:
    component_count: int
    giant_vertices: int
    giant_edges: int
    giant_per_degree: dict
    sizes: list = field(repr=False)

    def to_json(self):
        return {
            "K": self.component_count,
            "v_giant": self.giant_vertices,
            "e_giant": self.giant_edges,
            "giant_per_degree": {str(d): c for d, c in sorted(self.giant_per_degree.items())},
        }


def components(g: HalfEdgeGraph) -> ComponentSummary:
    uf = UnionFind(g.size)
    edges = g.edge_list()
    for u, v in edges.tolist():
        uf.union(u, v)

    alive = g.alive_vertices()
    if alive.size == 0:
        return ComponentSummary(component_count=0, giant_vertices=0, giant_edges=0, giant_per_degree={}, sizes=[])

    roots = np.fromiter((uf.find(v) for v in alive.tolist()), dtype=np.int64, count=alive.size)
    labels, sizes = np.unique(roots, return_counts=True)
    # roots are the smallest id of their component, so argmax breaks ties by smallest vertex id
    giant = labels[np.argmax(sizes)]

    in_giant = alive[roots == giant]
    giant_degrees = g.degrees[in_giant]
    values, counts = np.unique(giant_degrees, return_counts=True)
    giant_edges = int(np.count_nonzero(np.fromiter((uf.find(u) == giant for u in edges[:, 0].tolist()),
                                                   dtype=bool, count=edges.shape[0])))
    return ComponentSummary(
        component_count=int(labels.size),
        giant_vertices=int(in_giant.size),
        giant_edges=giant_edges,
        giant_per_degree={int(d): int(c) for d, c in zip(values, counts)},
        sizes=sorted(sizes.tolist(), reverse=True),
    )
