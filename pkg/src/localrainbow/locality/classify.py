"""Deciding the 2-locally-large property and classifying hypergraph classes.

Orders are built rank by rank. When a vertex receives the next rank, every vertex
ranked before it is below it and every other vertex above it, so its buckets depend
only on the set of already ranked vertices. The search therefore runs over prefix
sets instead of orders: a prefix set from which no completion works is recorded
once and refutes every order passing through it.
"""

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Any, Optional

import numpy as np
from tqdm import tqdm

from localrainbow.core import (
    UniformHypergraph,
    VertexOrder,
    enumerate_hypergraphs,
)
from localrainbow.core.canonical import canonical_key

from .partition import is_2ll_under

logger = logging.getLogger(__name__)


class Status(str, Enum):
    """Outcome of a 2-locally-large decision."""

    TWO_LL = "2LL"
    NOT_TWO_LL = "NOT2LL"


@dataclass(frozen=True)
class ClassificationRecord:
    """Decision for one hypergraph."""

    hypergraph: UniformHypergraph
    """The decided hypergraph, canonical when produced by `classify_all`."""

    status: Status
    """2LL or NOT2LL."""

    witness: Optional[VertexOrder]
    """An order under which the hypergraph is 2LL, None for NOT2LL."""

    orders_examined: int
    """Orders accepted or refuted, `n!` since every order is covered."""

    states_examined: int
    """Prefix sets visited by the search."""

    @property
    def is_2ll(self) -> bool:
        """Whether the status is 2LL."""
        return self.status is Status.TWO_LL

    def to_dict(self) -> dict[str, Any]:
        """Classification report entry."""
        return {
            "canonical": self.hypergraph.to_dict(),
            "status": self.status.value,
            "witness": list(self.witness.ranks) if self.witness is not None else None,
            "orders_examined": self.orders_examined,
            "states_examined": self.states_examined,
        }


class _PrefixSearch:
    """Search over sets of already ranked vertices, as bitmasks."""

    def __init__(self, H: UniformHypergraph) -> None:
        self.n = H.n
        self.r = H.r
        self.full = (1 << H.n) - 1
        self.edge_masks = [sum(1 << v for v in e) for e in H.edges]
        self._ok: dict[tuple[int, int], bool] = {}

    def placeable(self, x: int, below: int) -> bool:
        """Whether `x` has a large bucket when exactly `below` ranks under it."""
        key = (x, below)
        if key not in self._ok:
            counts = [0] * (2 * self.r + 2)
            bit = 1 << x
            for mask in self.edge_masks:
                under = bin(mask & below).count("1")
                counts[under + 1 if mask & bit else self.r + 1 + under] += 1
            self._ok[key] = max(counts) >= 2
        return self._ok[key]

    def find(self) -> tuple[Optional[list[int]], int]:
        """Witness sequence (lowest rank first) and number of states visited."""
        dead: set[int] = set()
        visited: set[int] = set()

        def extend(placed: int) -> Optional[list[int]]:
            visited.add(placed)
            if placed == self.full:
                return []
            if placed in dead:
                return None
            for x in range(self.n):
                if placed >> x & 1 or not self.placeable(x, placed):
                    continue
                rest = extend(placed | 1 << x)
                if rest is not None:
                    return [x, *rest]
            dead.add(placed)
            return None

        return extend(0), len(visited)

    def count(self) -> int:
        """Number of complete orders under which every vertex is placeable."""
        memo: dict[int, int] = {self.full: 1}

        def total(placed: int) -> int:
            if placed not in memo:
                memo[placed] = sum(
                    total(placed | 1 << x)
                    for x in range(self.n)
                    if not placed >> x & 1 and self.placeable(x, placed)
                )
            return memo[placed]

        return total(0)


def decide_2ll(H: UniformHypergraph) -> ClassificationRecord:
    """Decide whether `H` is 2-locally-large.

    The search runs on the hypergraph without its isolated vertices. An isolated
    vertex ranked above all others sees every edge in its last bucket, so a witness
    for the core extends to `H` by appending the isolated vertices at the top ranks;
    a refuted core refutes `H`, since the buckets of a non-isolated vertex only
    depend on the relative order of non-isolated vertices.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph, isolated vertices allowed.

    Returns
    -------
    ClassificationRecord
        2LL with a re-verified witness order, or NOT2LL with `orders_examined = n!`.

    Examples
    --------
    >>> from localrainbow.core import make_family
    >>> decide_2ll(make_family("matching", 3)).status.value
    'NOT2LL'
    """
    kept = H.non_isolated_vertices()
    core = H.without_isolated_vertices()
    isolated = H.isolated_vertices()

    if core.n == 0:
        sequence: Optional[list[int]] = None if H.n else []
        states = 1
    else:
        core_sequence, states = _PrefixSearch(core).find()
        sequence = (
            None
            if core_sequence is None
            else [kept[v] for v in core_sequence] + list(isolated)
        )

    if sequence is not None:
        witness = VertexOrder.from_sequence(sequence)
        if not is_2ll_under(H, witness):
            raise RuntimeError(f"Witness {witness.ranks} does not verify on {H}.")
        status = Status.TWO_LL
    else:
        witness = None
        status = Status.NOT_TWO_LL

    logger.debug(f"{H.edges} on {H.n} vertices: {status.value}, {states} states.")
    return ClassificationRecord(H, status, witness, factorial(H.n), states)


def count_witness_orders(H: UniformHypergraph) -> int:
    """Number of orders under which `H` is 2-locally-large.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph.

    Returns
    -------
    int
        Between 0 and `n!`; 0 exactly when `H` is not 2-locally-large.
    """
    return _PrefixSearch(H).count()


def random_orders_fail(
    H: UniformHypergraph, trials: int = 10_000, seed: int = 0
) -> bool:
    """Whether `trials` random orders all fail `is_2ll_under`.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph.
    trials : int, default=10000
        Number of random orders.
    seed : int, default=0
        Seed of the order generator.

    Returns
    -------
    bool
        True if no sampled order is a witness.
    """
    rng = np.random.default_rng(seed)
    return not any(
        is_2ll_under(H, VertexOrder.random(H.n, rng)) for _ in range(trials)
    )


def classify_all(
    r: int,
    m: int,
    *,
    max_n: Optional[int] = None,
    threads: int = 1,
    progress: bool = False,
) -> list[ClassificationRecord]:
    """Decide every isomorphism class of spanning r-graphs with `m` edges.

    Parameters
    ----------
    r : int
        Uniformity.
    m : int
        Number of edges.
    max_n : int or None, optional
        Vertex bound, defaults to `r * m`.
    threads : int, default=1
        Worker processes deciding classes.
    progress : bool, default=False
        Show a progress bar.

    Returns
    -------
    list of ClassificationRecord
        One record per class, sorted by canonical key.
    """
    if threads < 1:
        raise ValueError(f"Thread count must be at least 1, got {threads}.")

    classes: Sequence[UniformHypergraph] = list(enumerate_hypergraphs(r, m, max_n))
    if threads == 1:
        records = [
            decide_2ll(H)
            for H in tqdm(classes, disable=not progress, desc="Deciding classes")
        ]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            records = list(
                tqdm(
                    pool.map(decide_2ll, classes, chunksize=8),
                    total=len(classes),
                    disable=not progress,
                    desc="Deciding classes",
                )
            )

    records.sort(key=lambda record: canonical_key(record.hypergraph))
    n_2ll = sum(record.is_2ll for record in records)
    logger.info(
        f"{len(records)} classes of {r}-graphs with {m} edges, {n_2ll} of them 2LL."
    )
    return records
