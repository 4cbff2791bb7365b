"""Certificates that a copy is rainbow under none of its vertices."""

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Optional

from localrainbow.colorings import ColoringFamily
from localrainbow.core import Edge, Embedding


@dataclass(frozen=True)
class Clash:
    """Two edges of a copy sharing a color under the coloring of one vertex."""

    vertex: int
    """Host vertex whose coloring is inspected."""

    edge_a: Edge
    """First edge, sorted."""

    edge_b: Edge
    """Second edge, sorted."""

    color: int
    """The shared color."""

    def to_dict(self) -> dict[str, Any]:
        """Clash JSON."""
        return {
            "vertex": self.vertex,
            "edge_a": list(self.edge_a),
            "edge_b": list(self.edge_b),
            "color": self.color,
        }


@dataclass(frozen=True)
class ViolationWitness:
    """A copy of a pattern together with one clash per copy vertex."""

    embedding: Embedding
    """The copy."""

    clashes: tuple[Clash, ...]
    """One clash per image vertex, in pattern vertex order."""

    def recheck(self, family: ColoringFamily) -> bool:
        """Recompute every clash from the colors stored in `family`.

        Parameters
        ----------
        family : ColoringFamily
            Family the witness claims to refute.

        Returns
        -------
        bool
            True if the copy lives in the host of `family` and every image vertex
            has a clash whose two edges belong to the copy and share the stated
            color.
        """
        pattern = self.embedding.pattern
        if pattern.r != family.r or self.embedding.host_n != family.n:
            return False

        image_edges = set(self.embedding.image_edges)
        covered = set()
        for clash in self.clashes:
            if clash.edge_a == clash.edge_b:
                return False
            if clash.edge_a not in image_edges or clash.edge_b not in image_edges:
                return False
            if clash.vertex not in self.embedding.vertices:
                return False
            colors = {
                family.color(clash.vertex, clash.edge_a),
                family.color(clash.vertex, clash.edge_b),
            }
            if colors != {clash.color}:
                return False
            covered.add(clash.vertex)
        return covered == set(self.embedding.vertices)

    def to_dict(self) -> dict[str, Any]:
        """Witness JSON with the pattern, the vertex map and the clashes."""
        return {
            "pattern": self.embedding.pattern.to_dict(),
            "embedding": list(self.embedding.map),
            "clashes": [clash.to_dict() for clash in self.clashes],
        }


def witness_from_copy(
    family: ColoringFamily, embedding: Embedding
) -> Optional[ViolationWitness]:
    """Build the witness for a copy, or None if some vertex sees it rainbow.

    Parameters
    ----------
    family : ColoringFamily
        Family to inspect.
    embedding : Embedding
        Copy in the host of `family`.

    Returns
    -------
    ViolationWitness or None
        The first clashing pair of edges for every image vertex, None if the
        coloring of some image vertex is rainbow on the copy.
    """
    edges = embedding.image_edges
    clashes = []
    for u in embedding.vertices:
        colors = [family.color(u, e) for e in edges]
        clash = next(
            (
                Clash(u, edges[i], edges[j], colors[i])
                for i, j in combinations(range(len(edges)), 2)
                if colors[i] == colors[j]
            ),
            None,
        )
        if clash is None:
            return None
        clashes.append(clash)
    return ViolationWitness(embedding, tuple(clashes))
