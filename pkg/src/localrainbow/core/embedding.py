"""Enumeration of the copies of a pattern in a complete host.

A copy is a distinct image of the pattern, a vertex set together with an edge set.
Copies are listed host-subset first, in lexicographic order of the host subset, then
in the order in which the distinct labelings of the pattern on that subset are found.
"""

from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations, islice
from math import comb

import numpy as np
from numpy.typing import NDArray

from .canonical import twin_classes
from .hypergraph import Embedding, UniformHypergraph, colex_ranks


@lru_cache(maxsize=256)
def distinct_labelings(H: UniformHypergraph) -> tuple[tuple[int, ...], ...]:
    """Vertex maps of `H` onto 0..n-1 giving pairwise distinct edge sets.

    Twins are mapped in increasing order, which removes every labeling that only
    permutes a twin class; the remaining duplicates are removed by edge set.

    Parameters
    ----------
    H : UniformHypergraph
        Pattern.

    Returns
    -------
    tuple of tuple of int
        One map per distinct labeled copy, `n! / |Aut(H)|` of them.
    """
    n = H.n
    previous_twin = [-1] * n
    for cls in twin_classes(H):
        for first, second in zip(cls, cls[1:]):
            previous_twin[second] = first

    seen: set[frozenset] = set()
    labelings: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def assign(v: int) -> None:
        if v == n:
            edges = frozenset(tuple(sorted(image[u] for u in e)) for e in H.edges)
            if edges not in seen:
                seen.add(edges)
                labelings.append(tuple(image))
            return
        low = image[previous_twin[v]] + 1 if previous_twin[v] >= 0 else 0
        for target in range(low, n):
            if not used[target]:
                used[target] = True
                image[v] = target
                assign(v + 1)
                used[target] = False
        image[v] = -1

    assign(0)
    return tuple(labelings)


def count_copies(H: UniformHypergraph, host_n: int) -> int:
    """Number of copies of `H` in the complete host on `host_n` vertices."""
    if host_n < H.n:
        return 0
    return comb(host_n, H.n) * len(distinct_labelings(H))


def _check_host(H: UniformHypergraph, host_n: int) -> None:
    if host_n < H.n:
        raise ValueError(
            f"Host with {host_n} vertices cannot contain a pattern with {H.n} "
            "vertices."
        )


def enumerate_embeddings(H: UniformHypergraph, host_n: int) -> Iterator[Embedding]:
    """Yield every copy of `H` in the complete host exactly once.

    Parameters
    ----------
    H : UniformHypergraph
        Pattern, isolated vertices allowed.
    host_n : int
        Number of host vertices.

    Yields
    ------
    Embedding
        One embedding per copy.

    Raises
    ------
    ValueError
        If the host has fewer vertices than the pattern.

    Examples
    --------
    >>> from localrainbow.core.families import make_family
    >>> sum(1 for _ in enumerate_embeddings(make_family("clique", 3), 4))
    4
    """
    _check_host(H, host_n)
    labelings = distinct_labelings(H)
    for subset in combinations(range(host_n), H.n):
        for labeling in labelings:
            yield Embedding(H, host_n, tuple(subset[i] for i in labeling))


def embedding_blocks(
    H: UniformHypergraph, host_n: int, block_size: int = 65536
) -> Iterator[tuple[NDArray, NDArray]]:
    """Copies of `H` as integer arrays, in the order of `enumerate_embeddings`.

    Parameters
    ----------
    H : UniformHypergraph
        Pattern.
    host_n : int
        Number of host vertices.
    block_size : int, default=65536
        Number of copies per block, rounded down to whole host subsets and at
        least one subset.

    Yields
    ------
    numpy.ndarray
        Image vertices, shape (copies, |V(H)|), column `i` is the image of vertex i.
    numpy.ndarray
        Colexicographic ranks of the image edges, shape (copies, |E(H)|).
    """
    _check_host(H, host_n)
    found = distinct_labelings(H)
    labelings = np.array(found, dtype=np.int64).reshape(len(found), H.n)
    pattern_edges = np.array(H.edges, dtype=np.int64).reshape(H.m, H.r)
    subsets = combinations(range(host_n), H.n)
    per_block = max(1, block_size // len(found))

    while True:
        chunk = list(islice(subsets, per_block))
        if not chunk:
            return
        block = np.array(chunk, dtype=np.int64).reshape(len(chunk), H.n)

        # (subsets, labelings, n) -> (copies, n)
        verts = block[:, labelings].reshape(-1, H.n)
        if H.m:
            images = np.sort(verts[:, pattern_edges], axis=2)
            ranks = colex_ranks(images.reshape(-1, H.r)).reshape(-1, H.m)
        else:
            ranks = np.zeros((verts.shape[0], 0), dtype=np.int64)
        yield verts, ranks
