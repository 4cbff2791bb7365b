"""Random coloring families repaired by Moser-Tardos resampling.

A bad event is a copy of the complete r-graph on h vertices in which no vertex sees
its edges rainbow. Its variables are the colors of the copy's edges under the copy's
vertices; resampling a violated event redraws exactly those.
"""

import logging
from math import ceil, comb, e
from typing import Optional

import numpy as np
from tqdm import tqdm

from localrainbow.core import complete_edges, embedding_blocks, make_family

from .family import MAX_COLORS, ColoringFamily, rainbow_vertices

logger = logging.getLogger(__name__)


class ResampleBudgetExceeded(RuntimeError):
    """The resampling loop ran out of budget."""

    def __init__(self, resamples: int) -> None:
        super().__init__(f"Resample budget exhausted after {resamples} resamples.")
        self.resamples = resamples


def lll_color_bound(n: int, r: int, h: int) -> int:
    """Number of colors `ceil(h^(2r + r/h) * n^((h - r)/h))` used by `lll_sample`.

    Examples
    --------
    >>> lll_color_bound(8, 3, 4)
    19484
    """
    if not 2 <= r <= h <= n:
        raise ValueError(f"Expected 2 <= r <= h <= n, got r={r}, h={h}, n={n}.")
    return ceil(h ** (2 * r + r / h) * n ** ((h - r) / h))


def lll_condition(n: int, r: int, h: int, k: int) -> bool:
    """Whether `e p (d + 1) <= 1` for the bad events of `lll_sample`.

    `p = (h^(2r) / (2k))^h` bounds the probability of one bad event and
    `d = h^r n^(h - r)` the number of events sharing a variable with it.
    """
    p = (h ** (2 * r) / (2 * k)) ** h
    d = h**r * n ** (h - r)
    return e * p * (d + 1) <= 1


def _violated(colors: np.ndarray, verts: np.ndarray, ranks: np.ndarray) -> np.ndarray:
    return np.flatnonzero(~rainbow_vertices(colors, verts, ranks).any(axis=1))


def lll_sample(
    n: int,
    r: int,
    h: int,
    seed: int = 0,
    *,
    k: Optional[int] = None,
    budget: Optional[int] = None,
    progress: bool = False,
) -> ColoringFamily:
    """Sample a family local for the complete r-graph on `h` vertices.

    All colors are drawn uniformly from 1..k. Copies are then scanned in order and
    every violated copy has its variables redrawn, until a full scan finds none.

    Parameters
    ----------
    n : int
        Number of host vertices.
    r : int
        Edge size.
    h : int
        Vertex count of the pattern, `r <= h <= n`.
    seed : int, default=0
        Seed of the generator.
    k : int or None, optional
        Number of colors, `lll_color_bound(n, r, h)` by default.
    budget : int or None, optional
        Largest number of resamples, 1000 per copy by default.
    progress : bool, default=False
        Show a progress bar over scans.

    Returns
    -------
    ColoringFamily
        Family under which every copy has a rainbow vertex.

    Raises
    ------
    ValueError
        If the parameters are out of range.
    ResampleBudgetExceeded
        If the budget is exhausted.
    """
    bound = lll_color_bound(n, r, h)
    if k is None:
        k = bound
    if not 1 <= k <= MAX_COLORS:
        raise ValueError(f"Color count must lie in 1..{MAX_COLORS}, got {k}.")

    copies = comb(n, h)
    if budget is None:
        budget = 1000 * copies
    logger.info(
        f"Sampling n={n}, r={r}, h={h} with k={k} colors "
        f"(local lemma condition {'holds' if lll_condition(n, r, h, k) else 'fails'})."
    )

    rng = np.random.default_rng(seed)
    width = len(complete_edges(n, r))
    colors = rng.integers(1, k, size=(n, width), endpoint=True, dtype=np.uint32)

    verts, ranks = next(embedding_blocks(make_family("clique", h, r=r), n, copies))
    resamples = 0
    with tqdm(disable=not progress, desc="Resampling") as bar:
        violated = _violated(colors, verts, ranks)
        while violated.size:
            for index in violated:
                v, er = verts[index : index + 1], ranks[index : index + 1]
                if _violated(colors, v, er).size == 0:
                    continue
                if resamples >= budget:
                    raise ResampleBudgetExceeded(resamples)
                block = np.ix_(verts[index], ranks[index])
                colors[block] = rng.integers(
                    1, k, size=(h, ranks.shape[1]), endpoint=True, dtype=np.uint32
                )
                resamples += 1
                logger.debug(f"Resampled copy {tuple(verts[index])}.")
            bar.update(1)
            violated = _violated(colors, verts, ranks)

    logger.info(f"Sampling finished after {resamples} resamples.")
    return ColoringFamily(n, r, k, colors, provenance="lll", seed=seed)
