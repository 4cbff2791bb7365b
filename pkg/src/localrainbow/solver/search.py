"""Exact search for local colorings on small complete hosts.

The decision is encoded in CNF and handed to a SAT solver. Only the colors `f_u(e)`
with `u` and `e` in a common copy of the pattern get variables, one per color; all
other colors are fixed to 1. For every copy and copy vertex an auxiliary variable
states that the vertex sees the copy rainbow, and every copy needs one of them.

Host symmetry is broken on the first copy `C0`. Any local family can be relabeled
so that `C0` is rainbow under one of its vertices from a fixed set of
representatives of the automorphism orbits of the pattern. That vertex can then
permute its colors so that the edges of `C0` get colors 1..m in pattern order. Each
representative is a branch, solved under one assumption literal.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import comb
from typing import Optional

import numpy as np
from pysat.formula import IDPool
from pysat.solvers import Solver

from localrainbow.analysis import verify_local
from localrainbow.colorings import (
    ColoringFamily,
    constant_family,
    deterministic_family,
    injective_family,
)
from localrainbow.core import (
    UniformHypergraph,
    complete_edges,
    embedding_blocks,
    vertex_orbits,
)
from localrainbow.locality import decide_2ll

from .certificate import ColorBracket, SolveCertificate, SolveVerdict

logger = logging.getLogger(__name__)

SAT_BACKEND = "glucose4"
"""Name of the pysat solver, one that honours conflict budgets."""

_REDUCTIONS = ("relevant-pairs", "value-symmetry", "host-symmetry")

Branch = tuple[Optional[bool], dict[tuple[int, int], int], int]


class _Encoding:
    """CNF of the existence of an (n, r, H)-local coloring with `k` colors."""

    def __init__(self, n: int, H: UniformHypergraph, k: int) -> None:
        self.k = k
        self.pool = IDPool()
        self.clauses: list[list[int]] = []
        self.pairs: dict[tuple[int, int], list[int]] = {}

        first: Optional[tuple[list[int], list[int]]] = None
        copy = 0
        for verts, ranks in embedding_blocks(H, n):
            for vs, rs in zip(verts.tolist(), ranks.tolist()):
                first = first or (vs, rs)
                self._add_copy(copy, vs, rs)
                copy += 1

        # C0 rainbow under an orbit representative, colors 1..m on its edges
        assert first is not None
        vs, rs = first
        self.pins: list[int] = []
        for orbit in vertex_orbits(H):
            pin = self._rainbow(0, orbit[0])
            self.pins.append(pin)
            for color, e in enumerate(rs):
                self.clauses.append([-pin, self.pairs[vs[orbit[0]], e][color]])
        self.clauses.append(list(self.pins))

    def _rainbow(self, copy: int, position: int) -> int:
        return self.pool.id(("rainbow", copy, position))

    def _colors(self, u: int, e: int) -> list[int]:
        if (u, e) not in self.pairs:
            literals = [self.pool.id(("color", u, e, c)) for c in range(self.k)]
            self.pairs[u, e] = literals
            self.clauses.append(list(literals))
        return self.pairs[u, e]

    def _add_copy(self, copy: int, vs: list[int], rs: list[int]) -> None:
        watchers = []
        for position, u in enumerate(vs):
            rainbow = self._rainbow(copy, position)
            watchers.append(rainbow)
            for a, b in combinations([self._colors(u, e) for e in rs], 2):
                for x, y in zip(a, b):
                    self.clauses.append([-rainbow, -x, -y])
        self.clauses.append(watchers)

    def decode(self, model: list[int]) -> dict[tuple[int, int], int]:
        """Least true color of every pair; a rainbow vertex stays rainbow."""
        true = {literal for literal in model if literal > 0}
        return {
            pair: next(c for c, x in enumerate(literals, start=1) if x in true)
            for pair, literals in self.pairs.items()
        }


def _solve_branch(
    task: tuple[int, UniformHypergraph, int, int, int],
) -> Branch:
    n, H, k, branch, budget = task
    encoding = _Encoding(n, H, k)
    with Solver(name=SAT_BACKEND, bootstrap_with=encoding.clauses) as solver:
        solver.conf_budget(budget)
        outcome = solver.solve_limited(assumptions=[encoding.pins[branch]])
        conflicts = int(solver.accum_stats().get("conflicts", 0))
        values = encoding.decode(solver.get_model()) if outcome else {}
    return outcome, values, conflicts


def _merge(results: list[Branch]) -> Branch:
    """First satisfied branch, else UNSAT only when every branch was refuted."""
    conflicts = sum(result[2] for result in results)
    for outcome, values, _ in results:
        if outcome:
            return True, values, conflicts
    if all(result[0] is False for result in results):
        return False, {}, conflicts
    return None, {}, conflicts


def _check(n: int, r: int, H: UniformHypergraph, k: int) -> None:
    if H.r != r:
        raise ValueError(f"Pattern is {H.r}-uniform, expected r={r}.")
    if n < H.n:
        raise ValueError(f"Host with {n} vertices cannot contain {H.n} vertices.")
    if k < 1:
        raise ValueError(f"Color count must be at least 1, got {k}.")


def exists_local_coloring(
    n: int,
    r: int,
    H: UniformHypergraph,
    k: int,
    *,
    budget: int = 1_000_000,
    threads: int = 1,
) -> SolveCertificate:
    """Decide whether an (n, r, H)-local coloring with `k` colors exists.

    Parameters
    ----------
    n : int
        Number of host vertices, at least `|V(H)|`.
    r : int
        Edge size.
    H : UniformHypergraph
        Pattern.
    k : int
        Number of colors, at least 1.
    budget : int, default=1000000
        Largest number of SAT conflicts, split evenly between the branches.
    threads : int, default=1
        Worker processes; with more than one, the branches run in parallel. The
        satisfying branch of lowest index wins either way, so the verdict and the
        family do not depend on `threads`.

    Returns
    -------
    SolveCertificate
        SAT with a verified family, UNSAT after every branch was refuted, or
        INCONCLUSIVE when the budget ran out.

    Raises
    ------
    ValueError
        If the parameters are out of range.

    Examples
    --------
    >>> from localrainbow.core import make_family
    >>> exists_local_coloring(5, 3, make_family("tp3"), 2).verdict.value
    'UNSAT'
    >>> exists_local_coloring(5, 3, make_family("tp3"), 3).verdict.value
    'SAT'
    """
    _check(n, r, H, k)
    if H.m <= 1:
        family = ColoringFamily(n, r, k, constant_family(n, r).colors, "solver")
        return SolveCertificate(SolveVerdict.SAT, n, r, k, H, family)
    if k < H.m:
        return SolveCertificate(
            SolveVerdict.UNSAT, n, r, k, H, reductions=("pigeonhole",)
        )
    if k >= comb(n, r):
        return SolveCertificate(SolveVerdict.SAT, n, r, k, H, injective_family(n, r))

    branches = len(vertex_orbits(H))
    share = max(1, budget // branches)
    tasks = [(n, H, k, branch, share) for branch in range(branches)]
    logger.debug(f"Solving n={n}, k={k} in {branches} branches of {share} conflicts.")
    if threads <= 1:
        results: list[Branch] = []
        for task in tasks:
            results.append(_solve_branch(task))
            if results[-1][0]:
                break
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_solve_branch, tasks))
    outcome, values, nodes = _merge(results)

    if outcome is None:
        logger.info(f"Search for k={k} ran out of budget after {nodes} conflicts.")
        return SolveCertificate(
            SolveVerdict.INCONCLUSIVE,
            n,
            r,
            k,
            H,
            nodes=nodes,
            reductions=_REDUCTIONS,
            complete=False,
        )
    if not outcome:
        logger.info(f"No local coloring with k={k} ({nodes} conflicts).")
        return SolveCertificate(
            SolveVerdict.UNSAT, n, r, k, H, nodes=nodes, reductions=_REDUCTIONS
        )

    colors = np.ones((n, comb(n, r)), dtype=np.uint32)
    for (u, e), c in values.items():
        colors[u, e] = c
    family = ColoringFamily(n, r, k, colors, provenance="solver")
    if verify_local(family, H) is not None:
        raise RuntimeError(f"Solver produced a family that is not local for {H}.")
    logger.info(f"Found a local coloring with k={k} ({nodes} conflicts).")
    return SolveCertificate(
        SolveVerdict.SAT, n, r, k, H, family, nodes=nodes, reductions=_REDUCTIONS
    )


def _membership_family(n: int, r: int) -> ColoringFamily:
    """`f_u(e)` is 1 when `u` lies in `e` and 2 otherwise."""
    edges = complete_edges(n, r)
    contains = (edges[None, :, :] == np.arange(n)[:, None, None]).any(axis=2)
    return ColoringFamily(n, r, 2, np.where(contains, 1, 2), "membership")


def min_colors(
    n: int,
    r: int,
    H: UniformHypergraph,
    *,
    k_max: Optional[int] = None,
    budget: int = 1_000_000,
    threads: int = 1,
) -> ColorBracket:
    """Smallest number of colors of an (n, r, H)-local coloring, or a bracket.

    The lower end starts at `|E(H)|`, since a single vertex needs distinct colors on
    every edge of a copy. The upper end starts from a known family: the membership
    family for two edges, the deterministic family with `2r + 1` colors when `H` is
    not 2-locally-large, and the injective family otherwise. Color counts between
    the two ends are decided in increasing order.

    Parameters
    ----------
    n : int
        Number of host vertices.
    r : int
        Edge size.
    H : UniformHypergraph
        Pattern.
    k_max : int or None, optional
        Largest color count handed to the decision procedure.
    budget : int, default=1000000
        Conflict budget of every decision call.
    threads : int, default=1
        Worker processes of every decision call.

    Returns
    -------
    ColorBracket
        Exact when `lo == hi`.

    Raises
    ------
    ValueError
        If the parameters are out of range.
    """
    _check(n, r, H, 1)
    if H.m <= 1:
        return ColorBracket(1, 1, constant_family(n, r))

    lo = H.m
    if H.m == 2:
        return ColorBracket(lo, 2, _membership_family(n, r))

    hi, family = comb(n, r), injective_family(n, r)
    if 2 * r + 1 < hi and not decide_2ll(H).is_2ll:
        candidate = deterministic_family(n, r)
        if verify_local(candidate, H) is None:
            hi, family = candidate.k, candidate

    top = hi - 1 if k_max is None else min(k_max, hi - 1)
    for k in range(lo, top + 1):
        certificate = exists_local_coloring(
            n, r, H, k, budget=budget, threads=threads
        )
        if certificate.verdict is SolveVerdict.SAT:
            hi, family = k, certificate.family
            break
        if certificate.verdict is SolveVerdict.UNSAT:
            lo = k + 1

    logger.info(f"C_{r}({n}, H) lies in [{lo}, {hi}].")
    return ColorBracket(lo, hi, family)
