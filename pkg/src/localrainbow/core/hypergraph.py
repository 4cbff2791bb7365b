"""Uniform hypergraphs and the colexicographic indexing of complete hosts."""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Any, Optional, Union

import numpy as np
from numpy.typing import NDArray
from typing_extensions import Self

Edge = tuple[int, ...]


@lru_cache(maxsize=None)
def _binomial_table(n_max: int, r_max: int) -> NDArray:
    table = np.zeros((n_max + 1, r_max + 1), dtype=np.int64)
    for a in range(n_max + 1):
        for b in range(r_max + 1):
            table[a, b] = comb(a, b)
    table.setflags(write=False)
    return table


def edge_rank(edge: Iterable[int]) -> int:
    """Colexicographic rank of an edge among all subsets of the same size.

    Parameters
    ----------
    edge : iterable of int
        Distinct non-negative vertices, in any order.

    Returns
    -------
    int
        Rank of the sorted edge, starting at 0.

    Examples
    --------
    >>> edge_rank((0, 1, 2)), edge_rank((0, 1, 3)), edge_rank((2, 3, 4))
    (0, 1, 9)
    """
    return sum(comb(v, i + 1) for i, v in enumerate(sorted(edge)))


def edge_unrank(rank: int, r: int) -> Edge:
    """Inverse of `edge_rank` for edges of size `r`.

    Parameters
    ----------
    rank : int
        Colexicographic rank, non-negative.
    r : int
        Edge size.

    Returns
    -------
    tuple of int
        Sorted edge.

    Raises
    ------
    ValueError
        If `rank` is negative or `r` is smaller than 1.
    """
    if rank < 0:
        raise ValueError(f"Edge rank must be non-negative, got {rank}.")
    if r < 1:
        raise ValueError(f"Edge size must be at least 1, got {r}.")

    edge = []
    for i in range(r, 0, -1):
        # largest c with comb(c, i) <= rank
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        edge.append(c)
        rank -= comb(c, i)

    return tuple(reversed(edge))


def colex_ranks(edges: NDArray) -> NDArray:
    """Vectorized `edge_rank` over the rows of a sorted edge array.

    Parameters
    ----------
    edges : numpy.ndarray
        Integer array of shape (N, r), each row sorted ascending.

    Returns
    -------
    numpy.ndarray
        Ranks of shape (N,), as int64.
    """
    edges = np.asarray(edges, dtype=np.int64)
    if edges.ndim != 2:
        raise ValueError(f"Expected a 2D edge array, got shape {edges.shape}.")
    if edges.size == 0:
        return np.zeros(edges.shape[0], dtype=np.int64)

    r = edges.shape[1]
    table = _binomial_table(int(edges.max()), r)
    ranks = np.zeros(edges.shape[0], dtype=np.int64)
    for i in range(r):
        ranks += table[edges[:, i], i + 1]
    return ranks


@lru_cache(maxsize=64)
def complete_edges(n: int, r: int) -> NDArray:
    """All r-subsets of range(n) in colexicographic order.

    Row `i` holds the sorted edge of rank `i`, so `complete_edges(n, r)` is a prefix
    of `complete_edges(n + 1, r)`. The returned array is read-only.

    Parameters
    ----------
    n : int
        Number of vertices.
    r : int
        Edge size.

    Returns
    -------
    numpy.ndarray
        Array of shape (comb(n, r), r).
    """
    if n < 0 or r < 1:
        raise ValueError(f"Invalid complete hypergraph parameters n={n}, r={r}.")
    ordered = sorted(combinations(range(n), r), key=lambda e: e[::-1])
    edges = np.array(ordered, dtype=np.int64).reshape(len(ordered), r)
    edges.setflags(write=False)
    return edges


@dataclass(frozen=True)
class UniformHypergraph:
    """An r-uniform hypergraph on the vertices 0..n-1.

    Edges are normalized on construction: each edge is stored as a sorted tuple and
    the edge list itself is sorted. Two hypergraphs are equal when they have the same
    uniformity, vertex count and edge list.

    Examples
    --------
    >>> H = UniformHypergraph(3, 6, [(2, 1, 0), (1, 2, 3), (3, 4, 5)])
    >>> H.edges
    ((0, 1, 2), (1, 2, 3), (3, 4, 5))
    >>> H.degree(3)
    2
    """

    r: int
    """Uniformity, the size of every edge."""

    n: int
    """Number of vertices."""

    edges: tuple[Edge, ...]
    """Sorted tuple of sorted edges."""

    spanning: bool = field(default=False, compare=False)
    """If True, construction fails when a vertex lies in no edge."""

    def __post_init__(self) -> None:
        """Normalize and validate the edges.

        Raises
        ------
        ValueError
            If an edge has the wrong size, repeated or out-of-range vertices, if an
            edge is duplicated, or if `spanning` is set and a vertex is isolated.
        """
        if self.r < 2:
            raise ValueError(f"Uniformity must be at least 2, got {self.r}.")
        if self.n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {self.n}.")

        normalized = []
        for edge in self.edges:
            sorted_edge = tuple(sorted(int(v) for v in edge))
            if len(sorted_edge) != self.r:
                raise ValueError(
                    f"Edge {tuple(edge)} has {len(sorted_edge)} vertices, expected "
                    f"{self.r}."
                )
            if len(set(sorted_edge)) != self.r:
                raise ValueError(f"Edge {tuple(edge)} repeats a vertex.")
            if sorted_edge[0] < 0 or sorted_edge[-1] >= self.n:
                raise ValueError(
                    f"Edge {tuple(edge)} has a vertex outside 0..{self.n - 1}."
                )
            normalized.append(sorted_edge)

        normalized.sort()
        for first, second in zip(normalized, normalized[1:]):
            if first == second:
                raise ValueError(f"Duplicate edge {first}.")

        object.__setattr__(self, "edges", tuple(normalized))

        if self.spanning and self.isolated_vertices():
            raise ValueError(
                f"Hypergraph is flagged spanning but vertices "
                f"{self.isolated_vertices()} are isolated."
            )

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Iterable[int]],
        n: Optional[int] = None,
        r: Optional[int] = None,
    ) -> Self:
        """Build a hypergraph, inferring `n` and `r` from the edges when omitted.

        Parameters
        ----------
        edges : iterable of iterable of int
            Edges of the hypergraph.
        n : int or None, optional
            Number of vertices, defaults to one more than the largest vertex.
        r : int or None, optional
            Uniformity, defaults to the size of the first edge.

        Returns
        -------
        UniformHypergraph
            The hypergraph.
        """
        edge_list = [tuple(e) for e in edges]
        if r is None:
            if not edge_list:
                raise ValueError("Cannot infer the uniformity of an empty edge list.")
            r = len(edge_list[0])
        if n is None:
            n = max((max(e) for e in edge_list), default=-1) + 1
        return cls(r, n, tuple(edge_list))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def vertices(self) -> range:
        """The vertex range 0..n-1."""
        return range(self.n)

    @property
    def edge_set(self) -> frozenset[Edge]:
        """Edges as a frozen set."""
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        """Number of edges containing vertex `v`."""
        return sum(1 for e in self.edges if v in e)

    def isolated_vertices(self) -> tuple[int, ...]:
        """Vertices contained in no edge."""
        covered = {v for e in self.edges for v in e}
        return tuple(v for v in range(self.n) if v not in covered)

    def non_isolated_vertices(self) -> tuple[int, ...]:
        """Vertices contained in at least one edge, ascending."""
        covered = {v for e in self.edges for v in e}
        return tuple(sorted(covered))

    def without_isolated_vertices(self) -> "UniformHypergraph":
        """Drop isolated vertices, relabeling the others order-preservingly."""
        kept = self.non_isolated_vertices()
        index = {v: i for i, v in enumerate(kept)}
        return UniformHypergraph(
            self.r, len(kept), tuple(tuple(index[v] for v in e) for e in self.edges)
        )

    def with_isolated_vertices(self, count: int) -> "UniformHypergraph":
        """Add `count` isolated vertices labeled n..n+count-1."""
        if count < 0:
            raise ValueError(f"Cannot add a negative number of vertices ({count}).")
        return UniformHypergraph(self.r, self.n + count, self.edges)

    def relabel(
        self, mapping: Union[Sequence[int], Mapping[int, int]], n: Optional[int] = None
    ) -> "UniformHypergraph":
        """Apply an injective vertex map.

        Parameters
        ----------
        mapping : sequence or mapping of int
            Image of every vertex.
        n : int or None, optional
            Vertex count of the result, defaults to `self.n`.

        Returns
        -------
        UniformHypergraph
            The relabeled hypergraph.
        """
        images = [mapping[v] for v in range(self.n)]
        if len(set(images)) != len(images):
            raise ValueError(f"Vertex map {images} is not injective.")
        return UniformHypergraph(
            self.r,
            self.n if n is None else n,
            tuple(tuple(images[v] for v in e) for e in self.edges),
        )

    def is_subgraph_of(self, other: "UniformHypergraph") -> bool:
        """Whether every edge (and vertex) of this hypergraph belongs to `other`."""
        return (
            self.r == other.r
            and self.n <= other.n
            and self.edge_set <= other.edge_set
        )

    def edges_avoiding(self, vertices: Iterable[int]) -> tuple[Edge, ...]:
        """Edges disjoint from the given vertex set."""
        blocked = set(vertices)
        return tuple(e for e in self.edges if blocked.isdisjoint(e))

    def to_dict(self) -> dict[str, Any]:
        """Hypergraph JSON, `{"r": ..., "n": ..., "edges": [[...], ...]}`."""
        return {"r": self.r, "n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> Self:
        """Inverse of `to_dict`.

        Raises
        ------
        ValueError
            If a key is missing.
        """
        missing = {"r", "n", "edges"} - set(data)
        if missing:
            raise ValueError(f"Hypergraph JSON lacks keys {sorted(missing)}.")
        return cls(int(data["r"]), int(data["n"]), tuple(map(tuple, data["edges"])))


@dataclass(frozen=True)
class Embedding:
    """A copy of a pattern inside the complete host on `host_n` vertices."""

    pattern: UniformHypergraph
    """The embedded hypergraph."""

    host_n: int
    """Number of host vertices."""

    map: tuple[int, ...]
    """Image of each pattern vertex."""

    def __post_init__(self) -> None:
        """Validate the vertex map.

        Raises
        ------
        ValueError
            If the map has the wrong length, is not injective or leaves the host.
        """
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        if len(self.map) != self.pattern.n:
            raise ValueError(
                f"Embedding maps {len(self.map)} vertices, pattern has "
                f"{self.pattern.n}."
            )
        if len(set(self.map)) != len(self.map):
            raise ValueError(f"Embedding map {self.map} is not injective.")
        if any(v < 0 or v >= self.host_n for v in self.map):
            raise ValueError(
                f"Embedding map {self.map} leaves the host 0..{self.host_n - 1}."
            )

    @property
    def vertices(self) -> tuple[int, ...]:
        """Image vertices, in pattern order."""
        return self.map

    @property
    def image_edges(self) -> tuple[Edge, ...]:
        """Sorted image edges, in pattern edge order."""
        return tuple(tuple(sorted(self.map[v] for v in e)) for e in self.pattern.edges)

    def is_copy_in(self, host: UniformHypergraph) -> bool:
        """Whether every image edge is an edge of a (not necessarily complete) host."""
        return host.n == self.host_n and set(self.image_edges) <= host.edge_set
