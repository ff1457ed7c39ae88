"""Configuration-model sampling, removal, explosion and component measurement."""

from src.graphs.components import ComponentSummary, UnionFind, components
from src.graphs.explosion import ExplodedCounts, explode_vertices, exploded_counts, strip_red
from src.graphs.half_edge_graph import NORMAL, RED, HalfEdgeGraph
from src.graphs.removal import (
    empirical_alpha_sequence,
    remove_by_alpha_sequence,
    remove_quantile_fraction,
    removal_victims,
)
from src.graphs.rng import stream
from src.graphs.sampling import sample_cm, sample_degree_sequence
