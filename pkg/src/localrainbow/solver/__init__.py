"""Exact decision and minimization of the local rainbow coloring number."""

__all__ = [
    "ColorBracket",
    "SolveCertificate",
    "SolveVerdict",
    "backtrack_exists",
    "brute_force_exists",
    "exists_local_coloring",
    "min_colors",
]

from .certificate import ColorBracket, SolveCertificate, SolveVerdict
from .oracle import backtrack_exists, brute_force_exists
from .search import exists_local_coloring, min_colors
