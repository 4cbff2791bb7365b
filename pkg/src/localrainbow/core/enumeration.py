"""Enumeration of uniform hypergraphs up to isomorphism."""

import logging
from collections.abc import Iterator
from itertools import combinations
from typing import Optional

from .canonical import canonical_form
from .hypergraph import Edge, UniformHypergraph

logger = logging.getLogger(__name__)


def _extensions(last: Edge, used: int, r: int, max_n: int) -> list[tuple[Edge, int]]:
    """Edges greater than `last` that only introduce the next unused labels."""
    candidates = []
    for new in range(r + 1):
        if used + new > max_n:
            break
        fresh = tuple(range(used, used + new))
        for old in combinations(range(used), r - new):
            edge = old + fresh
            if edge > last:
                candidates.append((edge, used + new))
    candidates.sort()
    return candidates


def labeled_edge_lists(
    r: int, m: int, max_n: int
) -> Iterator[tuple[tuple[Edge, ...], int]]:
    """Edge lists the canonical enumeration reduces, before isomorphism rejection.

    The first edge is `(0, ..., r-1)`, edges increase lexicographically and every
    edge introduces only the next unused labels. Every spanning r-graph with `m` edges
    on at most `max_n` vertices has at least one labeling of this shape.

    Parameters
    ----------
    r : int
        Uniformity.
    m : int
        Number of edges.
    max_n : int
        Largest vertex count.

    Yields
    ------
    tuple of Edge
        Edge list, increasing.
    int
        Number of vertices used.
    """
    first = tuple(range(r))
    stack: list[tuple[tuple[Edge, ...], int]] = [((first,), r)]
    while stack:
        edges, used = stack.pop()
        if len(edges) == m:
            yield edges, used
            continue
        # reversed so that the smallest extension is popped first
        for edge, new_used in reversed(_extensions(edges[-1], used, r, max_n)):
            stack.append((edges + (edge,), new_used))


def enumerate_hypergraphs(
    r: int, m: int, max_n: Optional[int] = None
) -> Iterator[UniformHypergraph]:
    """Yield one canonical representative per isomorphism class.

    Classes are spanning r-graphs (no isolated vertex) with exactly `m` edges and at
    most `max_n` vertices. Representatives are yielded on first discovery, so the
    order is deterministic.

    Parameters
    ----------
    r : int
        Uniformity, at least 2.
    m : int
        Number of edges, at least 1.
    max_n : int or None, optional
        Vertex bound, at least `r`; defaults to `r * m`, the largest possible.

    Yields
    ------
    UniformHypergraph
        Canonical representatives.

    Raises
    ------
    ValueError
        If a parameter is out of range.

    Examples
    --------
    >>> [H.edges for H in enumerate_hypergraphs(3, 1)]
    [((0, 1, 2),)]
    """
    if r < 2:
        raise ValueError(f"Uniformity must be at least 2, got {r}.")
    if m < 1:
        raise ValueError(f"Edge count must be at least 1, got {m}.")
    if max_n is None:
        max_n = r * m
    if max_n < r:
        raise ValueError(f"Vertex bound {max_n} is smaller than the uniformity {r}.")

    seen = set()
    labeled = 0
    for edges, used in labeled_edge_lists(r, m, max_n):
        labeled += 1
        canon, _ = canonical_form(UniformHypergraph(r, used, edges))
        if canon not in seen:
            seen.add(canon)
            logger.debug(f"New class {canon.edges} on {canon.n} vertices.")
            yield canon

    logger.info(
        f"Enumerated {len(seen)} classes of {r}-graphs with {m} edges from {labeled} "
        "labeled edge lists."
    )
