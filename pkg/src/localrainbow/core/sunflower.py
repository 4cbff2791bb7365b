"""Sunflower search in uniform hypergraphs."""

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .families import erdos_rado_bounds
from .hypergraph import Edge, UniformHypergraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SunflowerWitness:
    """Edges pairwise intersecting exactly in a common core."""

    core: tuple[int, ...]
    """Sorted core vertices."""

    petals: tuple[Edge, ...]
    """Sorted petal edges, each containing the core."""

    def is_valid(self) -> bool:
        """Check the petals pairwise intersect in exactly the core."""
        core = set(self.core)
        if len(set(self.petals)) != len(self.petals):
            return False
        if not all(core <= set(p) for p in self.petals):
            return False
        return all(set(p) & set(q) == core for p, q in combinations(self.petals, 2))

    def to_dict(self) -> dict[str, list]:
        """Witness JSON."""
        return {"core": list(self.core), "petals": [list(p) for p in self.petals]}


def _greedy(
    residuals: Sequence[frozenset], m: int, core: frozenset
) -> Optional[tuple[frozenset, list[frozenset]]]:
    """Erdos-Rado recursion on residual sets of equal size."""
    disjoint: list[frozenset] = []
    covered: set[int] = set()
    for res in residuals:
        if covered.isdisjoint(res):
            disjoint.append(res)
            covered |= res
    if len(disjoint) >= m:
        return core, disjoint[:m]

    # every residual meets the union of a maximal disjoint family
    degrees = Counter(v for res in residuals for v in res if v in covered)
    if not degrees:
        return None
    x = min(degrees, key=lambda v: (-degrees[v], v))
    link = [res - {x} for res in residuals if x in res]
    return _greedy(link, m, core | {x})


def _packing(residuals: Sequence[frozenset], m: int) -> Optional[list[frozenset]]:
    """Exhaustive search for `m` pairwise disjoint residuals."""
    chosen: list[frozenset] = []

    def extend(start: int, covered: frozenset) -> bool:
        if len(chosen) == m:
            return True
        if len(residuals) - start < m - len(chosen):
            return False
        for i in range(start, len(residuals)):
            if covered.isdisjoint(residuals[i]):
                chosen.append(residuals[i])
                if extend(i + 1, covered | residuals[i]):
                    return True
                chosen.pop()
        return False

    return chosen if extend(0, frozenset()) else None


def _exhaustive(
    H: UniformHypergraph, m: int
) -> Optional[tuple[frozenset, list[frozenset]]]:
    for d in range(H.r):
        counts = Counter(core for e in H.edges for core in combinations(e, d))
        for core, count in sorted(counts.items()):
            if count < m:
                continue
            core_set = frozenset(core)
            residuals = [frozenset(e) - core_set for e in H.edges if core_set <= set(e)]
            packing = _packing(residuals, m)
            if packing is not None:
                return core_set, packing
    return None


def find_sunflower(H: UniformHypergraph, m: int) -> Optional[SunflowerWitness]:
    """Find `m` edges of `H` forming a sunflower.

    The Erdos-Rado procedure runs first: take a maximal family of pairwise disjoint
    edges, and if it is too small recurse on the link of the vertex of largest degree
    in its union. It always succeeds when `H` has at least `(m - 1)^r r! + 1` edges.
    Otherwise an exhaustive search over cores decides existence.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph.
    m : int
        Number of petals, at least 1.

    Returns
    -------
    SunflowerWitness or None
        A validated witness, or None when no sunflower with `m` petals exists.

    Raises
    ------
    ValueError
        If `m` is smaller than 1.

    Examples
    --------
    >>> from localrainbow.core.families import make_family
    >>> find_sunflower(make_family("matching", 3), 3).core
    ()
    """
    if m < 1:
        raise ValueError(f"Petal count must be at least 1, got {m}.")

    residuals = [frozenset(e) for e in H.edges]
    found = _greedy(residuals, m, frozenset())
    if found is None:
        if H.m >= erdos_rado_bounds(H.r, m)[1]:
            raise RuntimeError(
                f"Erdos-Rado procedure failed on {H.m} edges with m={m}."
            )
        logger.debug(f"Greedy procedure failed on {H.m} edges, searching all cores.")
        found = _exhaustive(H, m)
        if found is None:
            return None

    core, petal_residuals = found
    witness = SunflowerWitness(
        core=tuple(sorted(core)),
        petals=tuple(sorted(tuple(sorted(core | res)) for res in petal_residuals)),
    )
    if not witness.is_valid():
        raise RuntimeError(f"Sunflower witness {witness} fails validation.")
    return witness
