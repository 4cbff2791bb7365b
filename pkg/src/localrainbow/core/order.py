"""Vertex orders, bijections from vertices to ranks."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from typing_extensions import Self


@dataclass(frozen=True)
class VertexOrder:
    """A bijection from the vertices 0..n-1 to the ranks 1..n.

    Examples
    --------
    >>> order = VertexOrder.from_sequence([2, 0, 1])
    >>> order.ranks
    (2, 3, 1)
    >>> order.sequence()
    (2, 0, 1)
    >>> order.reverse().sequence()
    (1, 0, 2)
    """

    ranks: tuple[int, ...]
    """Rank of each vertex."""

    def __post_init__(self) -> None:
        """Check bijectivity.

        Raises
        ------
        ValueError
            If the ranks are not a permutation of 1..n.
        """
        object.__setattr__(self, "ranks", tuple(int(x) for x in self.ranks))
        if sorted(self.ranks) != list(range(1, len(self.ranks) + 1)):
            raise ValueError(
                f"Ranks {self.ranks} are not a permutation of 1..{len(self.ranks)}."
            )

    @classmethod
    def from_sequence(cls, sequence: Iterable[int]) -> Self:
        """Order listing the vertices from lowest to highest rank.

        Parameters
        ----------
        sequence : iterable of int
            Every vertex exactly once, lowest rank first.

        Returns
        -------
        VertexOrder
            The order.
        """
        seq = list(sequence)
        if sorted(seq) != list(range(len(seq))):
            raise ValueError(
                f"Sequence {seq} is not a permutation of 0..{len(seq) - 1}."
            )
        ranks = [0] * len(seq)
        for position, v in enumerate(seq):
            ranks[v] = position + 1
        return cls(tuple(ranks))

    @classmethod
    def identity(cls, n: int) -> Self:
        """Order ranking vertex v at v + 1."""
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> Self:
        """Uniformly random order drawn from `rng`."""
        return cls.from_sequence(int(v) for v in rng.permutation(n))

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.ranks)

    def rank(self, v: int) -> int:
        """Rank of vertex `v`."""
        return self.ranks[v]

    def sequence(self) -> tuple[int, ...]:
        """Vertices sorted by increasing rank."""
        return tuple(sorted(range(self.n), key=self.ranks.__getitem__))

    def reverse(self) -> "VertexOrder":
        """Order mapping rank t to n + 1 - t."""
        return VertexOrder(tuple(self.n + 1 - t for t in self.ranks))

    def sort(self, vertices: Iterable[int]) -> tuple[int, ...]:
        """Sort vertices by increasing rank."""
        return tuple(sorted(vertices, key=self.ranks.__getitem__))

    def labels(self) -> tuple[int, ...]:
        """Ranks shifted to 0-based labels."""
        return tuple(t - 1 for t in self.ranks)

    def restrict(self, vertices: Sequence[int]) -> "VertexOrder":
        """Induced order on `vertices`, relabeled 0..len(vertices)-1 in given order."""
        return VertexOrder.from_sequence(
            sorted(range(len(vertices)), key=lambda i: self.ranks[vertices[i]])
        )
