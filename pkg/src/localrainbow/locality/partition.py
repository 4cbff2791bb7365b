"""Position buckets of edges relative to a vertex under a vertex order."""

from dataclasses import dataclass

from localrainbow.core import Edge, UniformHypergraph, VertexOrder


def bucket_index(edge: Edge, x: int, ranks: tuple[int, ...], r: int) -> int:
    """Bucket of `edge` for vertex `x`, between 1 and 2r+1.

    An edge containing `x` goes to the position of `x` in the edge sorted by
    increasing rank (1..r). An edge avoiding `x` goes to `r` plus the position `x`
    would take if inserted into the edge (r+1..2r+1).

    Examples
    --------
    >>> bucket_index((0, 1, 2), 1, (1, 2, 3, 4), 3)
    2
    >>> bucket_index((0, 1, 2), 3, (1, 2, 3, 4), 3)
    7
    """
    below = sum(1 for u in edge if ranks[u] < ranks[x])
    if x in edge:
        return below + 1
    return r + 1 + below


@dataclass(frozen=True)
class TxiPartition:
    """The 2r+1 edge buckets of one vertex under one order."""

    x: int
    """Vertex the buckets are taken for."""

    order: VertexOrder
    """Order on the vertices."""

    buckets: tuple[tuple[Edge, ...], ...]
    """Bucket `i` is stored at index `i - 1`."""

    def bucket(self, i: int) -> tuple[Edge, ...]:
        """Edges of bucket `i`, 1-based."""
        if not 1 <= i <= len(self.buckets):
            raise ValueError(f"Bucket index must lie in 1..{len(self.buckets)}.")
        return self.buckets[i - 1]

    def large_bucket(self) -> int:
        """Index of the first bucket with at least two edges, 0 if none."""
        for i, bucket in enumerate(self.buckets, start=1):
            if len(bucket) >= 2:
                return i
        return 0


def _check(H: UniformHypergraph, order: VertexOrder) -> None:
    if order.n != H.n:
        raise ValueError(
            f"Order is defined on {order.n} vertices, hypergraph has {H.n}."
        )


def txi_partition(H: UniformHypergraph, order: VertexOrder, x: int) -> TxiPartition:
    """Split the edges of `H` into the 2r+1 buckets of vertex `x`.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph.
    order : VertexOrder
        Order on the vertices of `H`.
    x : int
        Vertex of `H`.

    Returns
    -------
    TxiPartition
        The buckets, in edge order within each bucket.

    Raises
    ------
    ValueError
        If `x` is not a vertex or the order has the wrong size.
    """
    _check(H, order)
    if not 0 <= x < H.n:
        raise ValueError(f"Vertex {x} is not in 0..{H.n - 1}.")

    buckets: list[list[Edge]] = [[] for _ in range(2 * H.r + 1)]
    for e in H.edges:
        buckets[bucket_index(e, x, order.ranks, H.r) - 1].append(e)
    return TxiPartition(x, order, tuple(tuple(b) for b in buckets))


def is_2ll_under(H: UniformHypergraph, order: VertexOrder) -> bool:
    """Whether every vertex has a bucket with at least two edges.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph.
    order : VertexOrder
        Order on the vertices of `H`.

    Returns
    -------
    bool
        True iff `H` is 2-locally-large under `order`.

    Examples
    --------
    >>> from localrainbow.core import make_family
    >>> c, d, a, b, e = 2, 3, 0, 1, 4
    >>> is_2ll_under(make_family("tp3"), VertexOrder.from_sequence([c, d, a, b, e]))
    True
    """
    _check(H, order)
    for x in H.vertices:
        counts = [0] * (2 * H.r + 2)
        for e in H.edges:
            counts[bucket_index(e, x, order.ranks, H.r)] += 1
        if max(counts) < 2:
            return False
    return True
