"""Exhaustive searches for local colorings, for cross-checking the solver.

Both searches work on the constrained (vertex, edge) pairs only and share no code
with the SAT encoding of `search`.
"""

from math import comb
from typing import Optional

import numpy as np

from localrainbow.core import UniformHypergraph, embedding_blocks


def brute_force_exists(
    n: int,
    r: int,
    H: UniformHypergraph,
    k: int,
    *,
    max_variables: int = 24,
    chunk: int = 1 << 14,
) -> Optional[bool]:
    """Try every coloring of the constrained (vertex, edge) pairs.

    Parameters
    ----------
    n : int
        Number of host vertices.
    r : int
        Edge size.
    H : UniformHypergraph
        Pattern.
    k : int
        Number of colors.
    max_variables : int, default=24
        Instances with more constrained pairs are skipped.
    chunk : int, default=16384
        Colorings checked per vectorized step.

    Returns
    -------
    bool or None
        Whether a local coloring exists, None if the instance is too large.
    """
    if H.m <= 1:
        return True
    if k >= comb(n, r):
        return True

    copies = [
        (vs, rs)
        for verts, ranks in embedding_blocks(H, n)
        for vs, rs in zip(verts.tolist(), ranks.tolist())
    ]
    pairs = sorted({(u, e) for vs, rs in copies for u in vs for e in rs})
    if len(pairs) > max_variables:
        return None
    index = {pair: i for i, pair in enumerate(pairs)}
    variables = np.array(
        [[[index[u, e] for e in rs] for u in vs] for vs, rs in copies], dtype=np.int64
    )  # (copies, h, m)

    weights = k ** np.arange(len(pairs), dtype=np.int64)
    total = k ** len(pairs)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = codes[:, None] // weights[None, :] % k
        seen = np.sort(digits[:, variables], axis=3)
        rainbow = np.all(np.diff(seen, axis=3) != 0, axis=3)
        if rainbow.any(axis=2).all(axis=1).any():
            return True
    return False


class _Backtracker:
    """Depth-first assignment of the constrained pairs, copy by copy.

    Every `f_u` may permute its colors on its own, so each vertex introduces colors
    in first-use order. For every copy and copy vertex the search keeps the number
    of repeated colors, and a branch dies as soon as some copy has a repeat under
    all of its vertices.
    """

    def __init__(self, n: int, H: UniformHypergraph, k: int) -> None:
        self.k = k
        self.h = H.n
        self.variables: list[tuple[int, int]] = []
        self.refs: list[list[tuple[int, int]]] = []
        index: dict[tuple[int, int], int] = {}

        n_copies = 0
        for verts, ranks in embedding_blocks(H, n):
            for vs, rs in zip(verts.tolist(), ranks.tolist()):
                for position, u in enumerate(vs):
                    for e in rs:
                        if (u, e) not in index:
                            index[u, e] = len(self.variables)
                            self.variables.append((u, e))
                            self.refs.append([])
                        self.refs[index[u, e]].append((n_copies, position))
                n_copies += 1

        self.counts: list[list[dict[int, int]]] = [
            [{} for _ in range(self.h)] for _ in range(n_copies)
        ]
        self.repeats = [[0] * self.h for _ in range(n_copies)]
        self.dead = [0] * n_copies
        self.top = [0] * n
        self.nodes = 0

    def _assign(self, v: int, c: int) -> bool:
        ok = True
        for copy, position in self.refs[v]:
            counts = self.counts[copy][position]
            seen = counts.get(c, 0)
            counts[c] = seen + 1
            if seen:
                self.repeats[copy][position] += 1
                if self.repeats[copy][position] == 1:
                    self.dead[copy] += 1
                    if self.dead[copy] == self.h:
                        ok = False
        return ok

    def _unassign(self, v: int, c: int) -> None:
        for copy, position in self.refs[v]:
            counts = self.counts[copy][position]
            counts[c] -= 1
            if counts[c]:
                self.repeats[copy][position] -= 1
                if self.repeats[copy][position] == 0:
                    self.dead[copy] -= 1
            else:
                del counts[c]

    def run(self, budget: int) -> Optional[bool]:
        """True if a coloring was found, False if refuted, None if out of budget."""

        def extend(v: int) -> Optional[bool]:
            if v == len(self.variables):
                return True
            u = self.variables[v][0]
            previous = self.top[u]
            for c in range(1, min(previous + 1, self.k) + 1):
                if self.nodes >= budget:
                    return None
                self.nodes += 1
                self.top[u] = max(previous, c)
                found = extend(v + 1) if self._assign(v, c) else False
                self._unassign(v, c)
                self.top[u] = previous
                if found or found is None:
                    return found
            return False

        return extend(0)


def backtrack_exists(
    n: int, r: int, H: UniformHypergraph, k: int, *, budget: int = 10_000_000
) -> Optional[bool]:
    """Decide existence by backtracking with per-vertex value symmetry.

    Parameters
    ----------
    n : int
        Number of host vertices.
    r : int
        Edge size.
    H : UniformHypergraph
        Pattern.
    k : int
        Number of colors.
    budget : int, default=10000000
        Largest number of search nodes.

    Returns
    -------
    bool or None
        Whether a local coloring exists, None if the budget ran out.
    """
    if H.m <= 1 or k >= comb(n, r):
        return True
    if k < H.m:
        return False
    return _Backtracker(n, H, k).run(budget)
