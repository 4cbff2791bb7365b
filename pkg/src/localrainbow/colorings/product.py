"""Product constructions on coloring families.

Tuple colors are flattened by mixed radix with the first coordinate most
significant: the tuple `(c_0, ..., c_{l-1})` over colors 1..k becomes
`1 + sum_i (c_i - 1) k^(l - 1 - i)`.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from localrainbow.core import VertexOrder, colex_ranks, complete_edges, edge_rank

from .family import MAX_COLORS, ColoringFamily


def mixed_radix(values: Sequence[int], k: int) -> int:
    """Flatten a tuple of colors in 1..k, first coordinate most significant.

    Examples
    --------
    >>> mixed_radix((1, 1), 3), mixed_radix((2, 3), 3)
    (1, 6)
    """
    code = 0
    for value in values:
        code = code * k + (value - 1)
    return code + 1


def product_lift(base: ColoringFamily, anchors: Sequence[int]) -> ColoringFamily:
    """Lift a family by appending the colorings of anchor vertices.

    `f'_v(e) = (f_v(e), f_{u_1}(e), ..., f_{u_h}(e))` flattened by mixed radix. If
    `base` is local for a pattern plus `c` isolated vertices and at least
    `|V(pattern)| + c` anchors are given, the lift is local for the pattern.

    Parameters
    ----------
    base : ColoringFamily
        Family to lift.
    anchors : sequence of int
        Distinct host vertices `u_1, ..., u_h`.

    Returns
    -------
    ColoringFamily
        Family with `k' = k^(h + 1)` colors.

    Raises
    ------
    ValueError
        If anchors repeat or leave the host, or `k'` does not fit in 32 bits.
    """
    anchors = [int(u) for u in anchors]
    if len(set(anchors)) != len(anchors):
        raise ValueError(f"Anchors {anchors} are not distinct.")
    if any(u < 0 or u >= base.n for u in anchors):
        raise ValueError(f"Anchors {anchors} leave the host 0..{base.n - 1}.")

    k_lift = base.k ** (len(anchors) + 1)
    if k_lift > MAX_COLORS:
        raise ValueError(
            f"Lifted color count {base.k}^{len(anchors) + 1} exceeds {MAX_COLORS}."
        )

    codes = base.colors.astype(np.int64) - 1
    anchor_part = np.zeros(codes.shape[1], dtype=np.int64)
    for u in anchors:
        anchor_part = anchor_part * base.k + codes[u]
    lifted = codes * base.k ** len(anchors) + anchor_part[None, :] + 1
    return base.with_colors(lifted, k_lift, provenance="lift")


@dataclass(frozen=True, eq=False)
class RamseyColoring:
    """Edge coloring of the complete (r+1)-graph built from a coloring family.

    Edge `e` with vertices `u_1, ..., u_{r+1}` in increasing base-order rank gets the
    `(r+1) x (r+1)` matrix whose entry `(i, j)` is `f_{u_i}(e - u_{r+2-j})`,
    flattened row-major. Equal matrices give equal colors.
    """

    n: int
    """Number of host vertices."""

    r: int
    """Edge size of the underlying family; colored edges have `r + 1` vertices."""

    k: int
    """Color count of the underlying family."""

    tuples: NDArray = field(repr=False)
    """Matrices, shape (comb(n, r + 1), (r + 1)^2), rows indexed by colex rank."""

    codes: NDArray = field(repr=False)
    """Compact color per edge, 1 up to the number of distinct matrices."""

    @property
    def n_colors(self) -> int:
        """Number of distinct colors, at most `k^((r + 1)^2)`."""
        return int(self.codes.max()) if self.codes.size else 0

    def color(self, edge: Iterable[int]) -> int:
        """Compact color of an (r+1)-edge."""
        return int(self.codes[edge_rank(edge)])

    def tuple_of(self, edge: Iterable[int]) -> tuple[int, ...]:
        """Flattened matrix of an (r+1)-edge."""
        return tuple(int(c) for c in self.tuples[edge_rank(edge)])

    def mixed_radix_color(self, edge: Iterable[int]) -> int:
        """Matrix flattened to one integer by mixed radix over 1..k."""
        return mixed_radix(self.tuple_of(edge), self.k)

    def is_monochromatic(self, vertices: Iterable[int]) -> bool:
        """Whether all (r+1)-subsets of `vertices` share one color."""
        subset = sorted(set(vertices))
        if len(subset) <= self.r + 1:
            return True
        local = complete_edges(len(subset), self.r + 1)
        ranks = colex_ranks(np.array(subset, dtype=np.int64)[local])
        return bool(np.unique(self.codes[ranks]).size == 1)


def ramsey_product_coloring(
    family: ColoringFamily, base_order: VertexOrder
) -> RamseyColoring:
    """Color the (r+1)-edges by the matrix of family colors on their sub-edges.

    Parameters
    ----------
    family : ColoringFamily
        Family on the complete r-graph.
    base_order : VertexOrder
        Order sorting the vertices of each (r+1)-edge.

    Returns
    -------
    RamseyColoring
        The product coloring.

    Raises
    ------
    ValueError
        If the order has the wrong size or the host has fewer than r+1 vertices.
    """
    n, r = family.n, family.r
    if base_order.n != n:
        raise ValueError(f"Order on {base_order.n} vertices, host has {n}.")
    if n < r + 1:
        raise ValueError(f"Host needs at least {r + 1} vertices, got {n}.")

    edges = complete_edges(n, r + 1)
    ranks = np.array(base_order.ranks, dtype=np.int64)
    by_rank = np.take_along_axis(edges, np.argsort(ranks[edges], axis=1), axis=1)

    tuples = np.empty((len(edges), (r + 1) ** 2), dtype=np.int64)
    for j in range(1, r + 2):
        removed = r + 1 - j  # column of u_{r+2-j}
        sub = np.sort(np.delete(by_rank, removed, axis=1), axis=1)
        sub_ranks = colex_ranks(sub)
        for i in range(r + 1):
            tuples[:, i * (r + 1) + (j - 1)] = family.colors[by_rank[:, i], sub_ranks]

    _, inverse = np.unique(tuples, axis=0, return_inverse=True)
    codes = inverse.reshape(-1).astype(np.int64) + 1
    return RamseyColoring(n, r, family.k, tuples, codes)
