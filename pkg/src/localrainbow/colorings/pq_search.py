"""Search for (p, q)-colorings of complete t-graphs.

A (p, q)-coloring colors the t-edges of the complete host so that every p vertices
span edges of at least q distinct colors.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Optional, Union

import numpy as np
from numpy.typing import NDArray
from typing_extensions import Self

from localrainbow.core import colex_ranks, complete_edges

from .family import decode_rlcf, encode_rlcf

logger = logging.getLogger(__name__)


def _subset_edge_ranks(n: int, t: int, p: int) -> NDArray:
    """Ranks of the t-edges of every p-subset, shape (comb(n, p), comb(p, t))."""
    subsets = complete_edges(n, p)
    local = complete_edges(p, t)
    return colex_ranks(subsets[:, local].reshape(-1, t)).reshape(len(subsets), -1)


def distinct_counts(colors: NDArray, n: int, t: int, p: int) -> NDArray:
    """Number of distinct colors spanned by every p-subset, in colex order."""
    seen = np.sort(np.asarray(colors)[_subset_edge_ranks(n, t, p)], axis=1)
    return 1 + (np.diff(seen, axis=1) != 0).sum(axis=1)


@dataclass(frozen=True, eq=False)
class PQColoring:
    """An edge coloring of the complete t-graph with the (p, q) property."""

    n: int
    """Number of vertices."""

    t: int
    """Edge size."""

    p: int
    """Size of the inspected vertex subsets."""

    q: int
    """Least number of colors every p-subset must span."""

    k: int
    """Number of colors, colors are 1..k."""

    colors: NDArray = field(repr=False)
    """Color of each edge, indexed by colex rank."""

    seed: int = 0
    """Seed of the search."""

    def __post_init__(self) -> None:
        """Validate shapes and ranges.

        Raises
        ------
        ValueError
            If the color array has the wrong length or a color is out of range.
        """
        colors = np.array(self.colors, dtype=np.uint32).reshape(-1)
        if colors.size != comb(self.n, self.t):
            raise ValueError(
                f"Expected {comb(self.n, self.t)} edge colors, got {colors.size}."
            )
        if colors.size and (colors.min() < 1 or colors.max() > self.k):
            raise ValueError(f"Colors must lie in 1..{self.k}.")
        colors.setflags(write=False)
        object.__setattr__(self, "colors", colors)

    def first_violation(self) -> Optional[tuple[int, ...]]:
        """First p-subset spanning fewer than q colors, checking every subset."""
        counts = distinct_counts(self.colors, self.n, self.t, self.p)
        bad = np.flatnonzero(counts < self.q)
        if bad.size == 0:
            return None
        return tuple(int(v) for v in complete_edges(self.n, self.p)[bad[0]])

    def is_valid(self) -> bool:
        """Whether every p-subset spans at least q colors."""
        return self.first_violation() is None

    def color(self, edge_rank: int) -> int:
        """Color of the edge of the given colex rank."""
        return int(self.colors[edge_rank])

    def to_bytes(self) -> bytes:
        """Binary encoding as a single row; `p` and `q` are not stored."""
        return encode_rlcf(self.n, self.t, self.k, self.seed, self.colors[None, :])

    @classmethod
    def from_bytes(cls, data: bytes, p: int, q: int) -> Self:
        """Decode a coloring written by `to_bytes`."""
        n, t, k, seed, colors = decode_rlcf(data)
        if colors.shape[0] != 1:
            raise ValueError(f"Expected a single row, found {colors.shape[0]}.")
        return cls(n, t, p, q, k, colors[0], seed)

    def save(self, path: Union[str, Path]) -> None:
        """Write the coloring to `path`."""
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def load(cls, path: Union[str, Path], p: int, q: int) -> Self:
        """Read a coloring written by `save`."""
        return cls.from_bytes(Path(path).read_bytes(), p, q)

    def summary(self) -> dict[str, int]:
        """JSON-serializable description without the colors."""
        return {
            "n": self.n,
            "t": self.t,
            "p": self.p,
            "q": self.q,
            "k": self.k,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class PQSearchResult:
    """Outcome of a (p, q)-coloring search."""

    coloring: Optional[PQColoring]
    """The coloring found, None if none was found."""

    complete: bool
    """True when the search was exhaustive, making a None a nonexistence proof."""

    nodes: int
    """Search nodes expanded."""


class _Backtracker:
    """Edge-by-edge color assignment with incremental subset color counts."""

    def __init__(self, n: int, t: int, p: int, q: int, k: int) -> None:
        self.q = q
        self.k = k
        self.subset_edges = _subset_edge_ranks(n, t, p)
        n_edges = comb(n, t)
        self.edge_subsets: list[list[int]] = [[] for _ in range(n_edges)]
        for s, ranks in enumerate(self.subset_edges):
            for rank in ranks:
                self.edge_subsets[int(rank)].append(s)
        n_subsets = len(self.subset_edges)
        self.counts: list[dict[int, int]] = [{} for _ in range(n_subsets)]
        self.distinct = [0] * n_subsets
        self.unassigned = [self.subset_edges.shape[1]] * n_subsets
        self.colors = [0] * n_edges
        self.nodes = 0

    def _assign(self, edge: int, c: int) -> bool:
        self.colors[edge] = c
        ok = True
        for s in self.edge_subsets[edge]:
            counts = self.counts[s]
            if counts.get(c, 0) == 0:
                self.distinct[s] += 1
            counts[c] = counts.get(c, 0) + 1
            self.unassigned[s] -= 1
            if self.distinct[s] + self.unassigned[s] < self.q:
                ok = False
        return ok

    def _unassign(self, edge: int, c: int) -> None:
        for s in self.edge_subsets[edge]:
            counts = self.counts[s]
            counts[c] -= 1
            if counts[c] == 0:
                del counts[c]
                self.distinct[s] -= 1
            self.unassigned[s] += 1
        self.colors[edge] = 0

    def _ordered(
        self, edge: int, top: int, rng: Optional[np.random.Generator]
    ) -> list[int]:
        # prefer colors absent from the subsets of the edge
        candidates = list(range(1, min(top + 1, self.k) + 1))
        if rng is not None:
            rng.shuffle(candidates)
        clashes = {
            c: sum(1 for s in self.edge_subsets[edge] if c in self.counts[s])
            for c in candidates
        }
        return sorted(candidates, key=clashes.__getitem__)

    def run(self, budget: int, rng: Optional[np.random.Generator]) -> Optional[bool]:
        """True if found, False if refuted, None if the budget ran out."""
        n_edges = len(self.colors)

        def extend(edge: int, top: int) -> Optional[bool]:
            if edge == n_edges:
                return True
            for c in self._ordered(edge, top, rng):
                if self.nodes >= budget:
                    return None
                self.nodes += 1
                if self._assign(edge, c):
                    found = extend(edge + 1, max(top, c))
                    if found is not False:
                        if found is None:
                            self._unassign(edge, c)
                        return found
                self._unassign(edge, c)
            return False

        return extend(0, 0)


def pq_coloring_search(
    n: int,
    t: int,
    p: int,
    q: int,
    k_max: int,
    seed: int = 0,
    *,
    budget: int = 200_000,
) -> PQSearchResult:
    """Search for a (p, q)-coloring with at most `k_max` colors.

    If `k_max` reaches the number of edges the all-distinct coloring is returned.
    Otherwise a depth-first search assigns the edges in colex order, introduces
    colors in first-use order and prefers colors absent from the subsets of the
    current edge. The first attempt uses a deterministic color preference and half
    the budget; randomized restarts seeded from `seed` share the rest.

    Parameters
    ----------
    n : int
        Number of vertices.
    t : int
        Edge size.
    p : int
        Size of the inspected subsets, `t <= p <= n`.
    q : int
        Least number of colors per p-subset, at most `comb(p, t)`.
    k_max : int
        Largest number of colors.
    seed : int, default=0
        Seed of the restarts.
    budget : int, default=200000
        Largest number of search nodes.

    Returns
    -------
    PQSearchResult
        The coloring, if found, and whether the search was exhaustive.

    Raises
    ------
    ValueError
        If the parameters are out of range.
    """
    if not 2 <= t <= p <= n:
        raise ValueError(f"Expected 2 <= t <= p <= n, got t={t}, p={p}, n={n}.")
    if not 1 <= q <= comb(p, t):
        raise ValueError(f"Expected 1 <= q <= {comb(p, t)}, got q={q}.")
    if k_max < 1:
        raise ValueError(f"Color bound must be at least 1, got {k_max}.")

    n_edges = comb(n, t)
    if k_max >= n_edges:
        colors = np.arange(1, n_edges + 1, dtype=np.uint32)
        return PQSearchResult(PQColoring(n, t, p, q, n_edges, colors, seed), True, 0)
    if k_max < q:
        return PQSearchResult(None, True, 0)

    rng = np.random.default_rng(seed)
    nodes = 0
    attempt_budgets = [budget // 2] + [budget // 8] * 4
    for attempt, attempt_budget in enumerate(attempt_budgets):
        search = _Backtracker(n, t, p, q, k_max)
        outcome = search.run(attempt_budget, rng if attempt else None)
        nodes += search.nodes
        logger.debug(
            f"Attempt {attempt} with k={k_max}: {outcome}, {search.nodes} nodes."
        )
        if outcome is None:
            continue
        if outcome is False:
            return PQSearchResult(None, True, nodes)

        used = max(search.colors)
        coloring = PQColoring(n, t, p, q, used, np.array(search.colors), seed)
        if not coloring.is_valid():
            raise RuntimeError(f"Search produced an invalid coloring: {coloring}.")
        return PQSearchResult(coloring, True, nodes)

    return PQSearchResult(None, False, nodes)


def min_pq_colors(
    n: int,
    t: int,
    p: int,
    q: int,
    k_max: int,
    seed: int = 0,
    *,
    budget: int = 200_000,
) -> PQSearchResult:
    """Smallest color count for which `pq_coloring_search` finds a coloring.

    Color counts from `q` up to `k_max` are tried in turn.

    Returns
    -------
    PQSearchResult
        The coloring with the fewest colors found; `complete` is True when every
        smaller color count was refuted exhaustively.
    """
    complete = True
    nodes = 0
    for k in range(q, k_max + 1):
        result = pq_coloring_search(n, t, p, q, k, seed, budget=budget)
        nodes += result.nodes
        if result.coloring is not None:
            return PQSearchResult(result.coloring, complete, nodes)
        complete = complete and result.complete
    return PQSearchResult(None, complete, nodes)

