"""Named hypergraph families.

Vertices a, b, c, ... of the named 3-graphs are labeled 0, 1, 2, ...

- ``tp3``: abc, bcd, cde
- ``sp3``: abc, bcd, def
- ``lc3``: abd, bce, acf
- ``tce``: abd, bcd, cde, acd
- ``lce``: abd, bce, acf, adf

Paths are grown one edge at a time. A tight step adds the last ``r - 1`` vertices of
the previous edge plus one new vertex, a loose step the last vertex of the previous
edge plus ``r - 1`` new vertices. ``sp1(t)`` alternates loose and tight steps
starting with loose, ``sp2(t)`` starting with tight.
"""

import re
from collections.abc import Sequence
from itertools import combinations
from math import factorial
from typing import Optional

from .hypergraph import Edge, UniformHypergraph

_NAMED_3GRAPHS: dict[str, tuple[Edge, ...]] = {
    "tp3": ((0, 1, 2), (1, 2, 3), (2, 3, 4)),
    "sp3": ((0, 1, 2), (1, 2, 3), (3, 4, 5)),
    "lc3": ((0, 1, 3), (1, 2, 4), (0, 2, 5)),
    "tce": ((0, 1, 3), (1, 2, 3), (2, 3, 4), (0, 2, 3)),
    "lce": ((0, 1, 3), (1, 2, 4), (0, 2, 5), (0, 3, 5)),
}

_PARAMETER_COUNTS: dict[str, int] = {
    "sp1": 1,
    "sp2": 1,
    "lp": 1,
    "tp": 1,
    "sunflower": 2,
    "matching": 1,
    "clique": 1,
}

FAMILY_NAMES: tuple[str, ...] = (*_NAMED_3GRAPHS, *_PARAMETER_COUNTS)
"""Every family id accepted by `make_family`."""


def _path(steps: Sequence[str], r: int) -> UniformHypergraph:
    edges = [tuple(range(r))]
    next_vertex = r
    for step in steps:
        previous = edges[-1]
        if step == "T":
            edge = previous[1:] + (next_vertex,)
            next_vertex += 1
        else:
            edge = (previous[-1], *range(next_vertex, next_vertex + r - 1))
            next_vertex += r - 1
        edges.append(edge)
    return UniformHypergraph(r, next_vertex, tuple(edges), spanning=True)


def sunflower(d: int, m: int, r: int = 3) -> UniformHypergraph:
    """The sunflower with core 0..d-1 and `m` petals of `r - d` new vertices each."""
    if not 0 <= d < r:
        raise ValueError(f"Sunflower core size must lie in 0..{r - 1}, got {d}.")
    if m < 1:
        raise ValueError(f"Sunflower needs at least one petal, got {m}.")
    core = tuple(range(d))
    petals = tuple(
        core + tuple(range(d + i * (r - d), d + (i + 1) * (r - d))) for i in range(m)
    )
    return UniformHypergraph(r, d + m * (r - d), petals, spanning=True)


def make_family(name: str, *params: int, r: int = 3) -> UniformHypergraph:
    """Build a named hypergraph.

    Parameters
    ----------
    name : str
        One of `FAMILY_NAMES`.
    *params : int
        Family parameters: the edge count `t` for ``sp1``, ``sp2``, ``lp``, ``tp``
        and ``matching``, `(d, m)` for ``sunflower``, `p` for ``clique``.
    r : int, default=3
        Uniformity. The fixed 3-graphs and the ``sp1``/``sp2`` paths require 3.

    Returns
    -------
    UniformHypergraph
        The labeled hypergraph.

    Raises
    ------
    ValueError
        If the family is unknown or the parameters are invalid.

    Examples
    --------
    >>> make_family("sp3").edges
    ((0, 1, 2), (1, 2, 3), (3, 4, 5))
    >>> make_family("sp1", 4).n
    8
    >>> make_family("sunflower", 0, 3) == make_family("matching", 3)
    True
    """
    name = name.lower()
    if name in _NAMED_3GRAPHS:
        if params:
            raise ValueError(f"Family '{name}' takes no parameters, got {params}.")
        if r != 3:
            raise ValueError(f"Family '{name}' is 3-uniform, got r={r}.")
        edges = _NAMED_3GRAPHS[name]
        n = max(max(e) for e in edges) + 1
        return UniformHypergraph(3, n, edges, spanning=True)

    if name not in _PARAMETER_COUNTS:
        raise ValueError(
            f"Unknown family '{name}', expected one of {', '.join(FAMILY_NAMES)}."
        )
    if len(params) != _PARAMETER_COUNTS[name]:
        raise ValueError(
            f"Family '{name}' takes {_PARAMETER_COUNTS[name]} parameter(s), got "
            f"{len(params)}."
        )

    if name == "sunflower":
        return sunflower(params[0], params[1], r)
    if name == "clique":
        (p,) = params
        if p < r:
            raise ValueError(f"Clique needs at least r={r} vertices, got {p}.")
        return UniformHypergraph(r, p, tuple(combinations(range(p), r)), spanning=True)

    (t,) = params
    if t < 1:
        raise ValueError(f"Family '{name}' needs at least one edge, got {t}.")
    if name == "matching":
        return sunflower(0, t, r)
    if name == "lp":
        return _path("L" * (t - 1), r)
    if name == "tp":
        return _path("T" * (t - 1), r)

    if r != 3:
        raise ValueError(f"Family '{name}' is 3-uniform, got r={r}.")
    first, second = ("L", "T") if name == "sp1" else ("T", "L")
    steps = [first if i % 2 == 0 else second for i in range(t - 1)]
    return _path(steps, 3)


_FAMILY_ID = re.compile(r"^\s*([a-z_0-9]+?)\s*(?:\(\s*([0-9,\s]*)\))?\s*$")


def parse_family(text: str, r: int = 3) -> UniformHypergraph:
    """Parse a family id such as ``tp3``, ``sunflower(1,3)`` or ``clique(5)``.

    Parameters
    ----------
    text : str
        Family id.
    r : int, default=3
        Uniformity.

    Returns
    -------
    UniformHypergraph
        The family member.

    Raises
    ------
    ValueError
        If the id is malformed or names an unknown family.

    Examples
    --------
    >>> parse_family("sunflower(1, 3)").edges
    ((0, 1, 2), (0, 3, 4), (0, 5, 6))
    """
    match = _FAMILY_ID.match(text.lower())
    if match is None:
        raise ValueError(f"Malformed family id '{text}'.")
    name, args = match.groups()
    params = [int(a) for a in args.split(",") if a.strip()] if args else []
    return make_family(name, *params, r=r)


def separated_pair_overlap(H: UniformHypergraph) -> Optional[int]:
    """Largest overlap of two edges whose outside still spans two edges.

    Pairs `e != e'` qualify when at least two edges of `H` avoid `e | e'`.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph.

    Returns
    -------
    int or None
        Largest `|e & e'|` over qualifying pairs, None if no pair qualifies.

    Examples
    --------
    >>> separated_pair_overlap(make_family("lp", 5))
    1
    >>> separated_pair_overlap(make_family("tp", 6))
    2
    >>> separated_pair_overlap(make_family("tp3")) is None
    True
    """
    best: Optional[int] = None
    for e, f in combinations(H.edges, 2):
        if len(H.edges_avoiding(set(e) | set(f))) >= 2:
            overlap = len(set(e) & set(f))
            if best is None or overlap > best:
                best = overlap
    return best


def erdos_rado_bounds(r: int, m: int) -> tuple[int, int]:
    """Classical bounds on the edge count forcing a sunflower with `m` petals.

    Parameters
    ----------
    r : int
        Uniformity.
    m : int
        Number of petals.

    Returns
    -------
    tuple of int
        `((m - 1)^r, (m - 1)^r r! + 1)`; some r-graph with the first number of edges
        has no such sunflower, every r-graph with the second number has one.

    Examples
    --------
    >>> erdos_rado_bounds(3, 4)
    (27, 163)
    """
    if r < 1 or m < 1:
        raise ValueError(f"Invalid sunflower parameters r={r}, m={m}.")
    return (m - 1) ** r, (m - 1) ** r * factorial(r) + 1
