"""Deterministic coloring families."""

from math import comb
from typing import Optional

import numpy as np

from localrainbow.core import VertexOrder, complete_edges

from .family import ColoringFamily


def deterministic_family(
    n: int, r: int, base_order: Optional[VertexOrder] = None
) -> ColoringFamily:
    """Color every edge by its bucket index for the coloring vertex.

    `f_v(e)` is the index of the bucket of `e` for `v` under `base_order`: the
    position of `v` in `e` when `v` lies in `e`, otherwise `r` plus the position `v`
    would take in `e`. The family uses `2r + 1` colors and is local for every
    hypergraph that is not 2-locally-large.

    Parameters
    ----------
    n : int
        Number of vertices, at least `r`.
    r : int
        Edge size.
    base_order : VertexOrder or None, optional
        Order on the vertices, the identity by default.

    Returns
    -------
    ColoringFamily
        Family with `k = 2r + 1`.

    Raises
    ------
    ValueError
        If `n < r` or the order has the wrong size.

    Examples
    --------
    >>> family = deterministic_family(5, 3)
    >>> family.k, family.color(0, (0, 1, 2)), family.color(4, (0, 1, 2))
    (7, 1, 7)
    """
    if n < r:
        raise ValueError(f"Host needs at least r={r} vertices, got {n}.")
    if base_order is None:
        base_order = VertexOrder.identity(n)
    if base_order.n != n:
        raise ValueError(f"Order on {base_order.n} vertices, host has {n}.")

    edges = complete_edges(n, r)
    ranks = np.array(base_order.ranks, dtype=np.int64)
    edge_ranks = ranks[edges]  # (E, r)
    vertex_ranks = ranks[:, None, None]  # (n, 1, 1)

    below = (edge_ranks[None, :, :] < vertex_ranks).sum(axis=2)
    contains = (edges[None, :, :] == np.arange(n)[:, None, None]).any(axis=2)
    colors = np.where(contains, below + 1, r + 1 + below)
    return ColoringFamily(n, r, 2 * r + 1, colors, provenance="deterministic")


def constant_family(n: int, r: int) -> ColoringFamily:
    """Every edge colored 1 under every vertex."""
    colors = np.ones((n, comb(n, r)), dtype=np.uint32)
    return ColoringFamily(n, r, 1, colors, provenance="constant")


def injective_family(n: int, r: int) -> ColoringFamily:
    """Every edge colored by its rank plus one, rainbow on every copy."""
    width = comb(n, r)
    colors = np.tile(np.arange(1, width + 1, dtype=np.uint32), (n, 1))
    return ColoringFamily(n, r, width, colors, provenance="injective")
