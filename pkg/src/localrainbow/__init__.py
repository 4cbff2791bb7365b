"""Local rainbow colorings of complete uniform hypergraphs."""

from .analysis import attack, verify_local
from .colorings import ColoringFamily, deterministic_family, lll_sample
from .core import UniformHypergraph, VertexOrder, make_family, parse_family
from .locality import classify_all, decide_2ll
from .solver import exists_local_coloring, min_colors

__all__ = [
    "ColoringFamily",
    "UniformHypergraph",
    "VertexOrder",
    "attack",
    "classify_all",
    "decide_2ll",
    "deterministic_family",
    "exists_local_coloring",
    "lll_sample",
    "make_family",
    "min_colors",
    "parse_family",
    "verify_local",
]
