"""Coloring family assembled from a (4, 3)- and a (5, 4)-coloring."""

from typing import Optional

import numpy as np

from localrainbow.core import colex_ranks, complete_edges

from .family import MAX_COLORS, ColoringFamily
from .pq_search import PQColoring


def tce_family(
    n: int, gamma: PQColoring, rho: PQColoring, *, offset: Optional[int] = None
) -> ColoringFamily:
    """Combine two (p, q)-colorings into a family on the complete 3-graph.

    `f_v(e) = gamma(e)` when `v` lies in `e`, and `rho(e + v)` shifted past the
    colors of `gamma` otherwise. Every copy of the four-edge 3-graph with edges
    abd, bcd, cde, acd is then rainbow under the coloring of a, b or e.

    Parameters
    ----------
    n : int
        Number of vertices.
    gamma : PQColoring
        (4, 3)-coloring of the complete 3-graph on `n` vertices.
    rho : PQColoring
        (5, 4)-coloring of the complete 4-graph on `n` vertices.
    offset : int or None, optional
        Shift applied to the colors of `rho`, `gamma.k` by default.

    Returns
    -------
    ColoringFamily
        Family with `offset + rho.k` colors.

    Raises
    ------
    ValueError
        If a coloring has the wrong parameters or host, or the shifted colors of
        `rho` overlap those of `gamma`.
    """
    if (gamma.t, gamma.p, gamma.q) != (3, 4, 3):
        raise ValueError(
            f"gamma must be a (4, 3)-coloring of 3-edges, got t={gamma.t}, "
            f"p={gamma.p}, q={gamma.q}."
        )
    if (rho.t, rho.p, rho.q) != (4, 5, 4):
        raise ValueError(
            f"rho must be a (5, 4)-coloring of 4-edges, got t={rho.t}, p={rho.p}, "
            f"q={rho.q}."
        )
    if gamma.n != n or rho.n != n:
        raise ValueError(
            f"Colorings live on {gamma.n} and {rho.n} vertices, not {n}."
        )
    if offset is None:
        offset = gamma.k
    if offset < gamma.k:
        raise ValueError(
            f"Offset {offset} makes rho colors overlap gamma colors 1..{gamma.k}."
        )
    k = offset + rho.k
    if k > MAX_COLORS:
        raise ValueError(f"Color count {k} exceeds {MAX_COLORS}.")

    edges = complete_edges(n, 3)
    gamma_colors = gamma.colors.astype(np.int64)
    rho_colors = rho.colors.astype(np.int64) + offset

    colors = np.empty((n, len(edges)), dtype=np.int64)
    for v in range(n):
        contains = (edges == v).any(axis=1)
        colors[v, contains] = gamma_colors[contains]
        outside = edges[~contains]
        extended = np.sort(np.column_stack([outside, np.full(len(outside), v)]), axis=1)
        colors[v, ~contains] = rho_colors[colex_ranks(extended)]

    return ColoringFamily(n, 3, k, colors, provenance="tce", seed=gamma.seed)
