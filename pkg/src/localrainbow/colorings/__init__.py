"""Coloring families and their constructions."""

__all__ = [
    "MAX_COLORS",
    "ColoringFamily",
    "PQColoring",
    "PQSearchResult",
    "RamseyColoring",
    "ResampleBudgetExceeded",
    "constant_family",
    "deterministic_family",
    "distinct_counts",
    "injective_family",
    "lll_color_bound",
    "lll_condition",
    "lll_sample",
    "min_pq_colors",
    "mixed_radix",
    "pq_coloring_search",
    "product_lift",
    "rainbow_vertices",
    "ramsey_product_coloring",
    "tce_family",
]

from .deterministic import constant_family, deterministic_family, injective_family
from .family import MAX_COLORS, ColoringFamily, rainbow_vertices
from .lll import ResampleBudgetExceeded, lll_color_bound, lll_condition, lll_sample
from .pq_search import (
    PQColoring,
    PQSearchResult,
    distinct_counts,
    min_pq_colors,
    pq_coloring_search,
)
from .product import RamseyColoring, mixed_radix, product_lift, ramsey_product_coloring
from .tce import tce_family
