"""Polynomial lower-bound exponents certified by the pigeonhole arguments."""

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from localrainbow.core import (
    Edge,
    UniformHypergraph,
    find_sunflower,
    is_isomorphic,
    make_family,
)

logger = logging.getLogger(__name__)


def four_edge_configuration(
    H: UniformHypergraph,
) -> Optional[tuple[Edge, Edge, Edge, Edge]]:
    """Two overlapping edges and two edges avoiding both.

    Among edges `e1, e2` with `|e1 & e2| = d > 0` and distinct `e3, e4` disjoint from
    `e1 | e2`, the configuration with the largest `d` is returned.

    Returns
    -------
    tuple of Edge or None
        `(e1, e2, e3, e4)`, None if `H` has no such configuration.

    Examples
    --------
    >>> four_edge_configuration(make_family("tp", 6))
    ((0, 1, 2), (1, 2, 3), (4, 5, 6), (5, 6, 7))
    """
    best: Optional[tuple[Edge, Edge, Edge, Edge]] = None
    best_overlap = 0
    for e1, e2 in combinations(H.edges, 2):
        overlap = len(set(e1) & set(e2))
        if overlap <= best_overlap:
            continue
        outside = H.edges_avoiding(set(e1) | set(e2))
        if len(outside) >= 2:
            best, best_overlap = (e1, e2, outside[0], outside[1]), overlap
    return best


def _sunflower_exponent(r: int, d: int) -> Fraction:
    return min(Fraction(1, 2 * (r - d) + 1), Fraction(1, d + 1))


def _sunflower_core(H: UniformHypergraph) -> Optional[int]:
    """Core size if the edges of `H` form a sunflower with at least four petals."""
    if H.m < 4:
        return None
    core = set.intersection(*(set(e) for e in H.edges))
    if all(set(e) & set(f) == core for e, f in combinations(H.edges, 2)):
        return len(core)
    return None


def _is_clique(H: UniformHypergraph) -> Optional[int]:
    """Vertex count if the non-isolated part of `H` is a complete r-graph."""
    p = len(H.non_isolated_vertices())
    if p >= H.r and H.m == comb(p, H.r):
        return p
    return None


def lower_bound_exponent(H: UniformHypergraph) -> Optional[Fraction]:
    """Best exponent `b` with `C_r(n, H) = Omega(n^b)` certified for the shape of `H`.

    Recognized shapes:

    - a sunflower with core size `d` and at least four petals, `r >= 3`:
      `min(1/(2(r-d)+1), 1/(d+1))`;
    - a complete r-graph on `p >= (2r-1)r + 2(r-1)` vertices: `r/(r+1)`;
    - the special 3-uniform paths with four edges: 1/8 (loose first) and 1/7
      (tight first);
    - two edges meeting in `d > 0` vertices plus two edges avoiding both:
      `1/(2(r-d)+1)`;
    - a sunflower with four petals as a subgraph: its exponent divided by
      `|V(H)| + 1`.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph.

    Returns
    -------
    Fraction or None
        The largest certified exponent, None if no shape applies.

    Examples
    --------
    >>> lower_bound_exponent(make_family("matching", 4))
    Fraction(1, 7)
    >>> lower_bound_exponent(make_family("sp3")) is None
    True
    """
    r = H.r
    core_part = H.without_isolated_vertices()
    candidates: list[Fraction] = []

    d = _sunflower_core(core_part)
    if d is not None and r >= 3:
        candidates.append(_sunflower_exponent(r, d))

    p = _is_clique(H)
    if p is not None and p >= (2 * r - 1) * r + 2 * (r - 1):
        candidates.append(Fraction(r, r + 1))

    if r == 3 and H.m == 4:
        if is_isomorphic(core_part, make_family("sp1", 4)):
            candidates.append(Fraction(1, 8))
        if is_isomorphic(core_part, make_family("sp2", 4)):
            candidates.append(Fraction(1, 7))

    configuration = four_edge_configuration(H)
    if configuration is not None:
        e1, e2 = configuration[:2]
        overlap = len(set(e1) & set(e2))
        candidates.append(Fraction(1, 2 * (r - overlap) + 1))

    if r >= 3 and H.m >= 4:
        witness = find_sunflower(H, 4)
        if witness is not None:
            exponent = _sunflower_exponent(r, len(witness.core))
            candidates.append(exponent / (H.n + 1))

    if not candidates:
        return None
    best = max(candidates)
    logger.debug(f"Exponent candidates {candidates}, best {best}.")
    return best
