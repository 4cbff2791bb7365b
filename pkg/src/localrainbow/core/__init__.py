"""Hypergraph representation, isomorphism, enumeration and named families."""

__all__ = [
    "FAMILY_NAMES",
    "Edge",
    "Embedding",
    "SunflowerWitness",
    "UniformHypergraph",
    "VertexOrder",
    "canonical_form",
    "colex_ranks",
    "complete_edges",
    "count_copies",
    "cube_bridge",
    "edge_rank",
    "edge_to_vector",
    "edge_unrank",
    "embedding_blocks",
    "enumerate_embeddings",
    "enumerate_hypergraphs",
    "erdos_rado_bounds",
    "find_sunflower",
    "is_isomorphic",
    "make_family",
    "parse_family",
    "separated_pair_overlap",
    "twin_classes",
    "vertex_orbits",
]

from .canonical import canonical_form, is_isomorphic, twin_classes, vertex_orbits
from .cube import cube_bridge, edge_to_vector
from .embedding import count_copies, embedding_blocks, enumerate_embeddings
from .enumeration import enumerate_hypergraphs
from .families import (
    FAMILY_NAMES,
    erdos_rado_bounds,
    make_family,
    parse_family,
    separated_pair_overlap,
)
from .hypergraph import (
    Edge,
    Embedding,
    UniformHypergraph,
    colex_ranks,
    complete_edges,
    edge_rank,
    edge_unrank,
)
from .order import VertexOrder
from .sunflower import SunflowerWitness, find_sunflower
