"""Constructive pigeonhole searches for copies that no vertex sees rainbow.

Each procedure follows a counting argument: it fixes part of the host, buckets
candidate edges by the colors that a few vertices give them, and closes a copy
from a bucket holding two members. The arguments only guarantee success for huge
hosts, so at small sizes a search may come back empty; that says nothing about
the family. Every copy found is turned into a `ViolationWitness` through
`witness_from_copy`.

Pattern ids:

- ``sp3``: the 3-graph abc, bcd, def;
- ``sp4_1`` / ``sp4_2``: the special paths with four edges, loose first / tight
  first;
- ``sunflower(d,t)``: core size `d < r`, `t >= 4` petals;
- ``clique(p)``: the complete r-graph on `p >= r` vertices. When the counting
  search closes nothing, the p-subsets are scanned directly in lexicographic order,
  up to `CLIQUE_SCAN_LIMIT` of them.
"""

import logging
import re
from collections import defaultdict
from collections.abc import Sequence
from itertools import combinations
from typing import Optional

import numpy as np

from localrainbow.colorings import ColoringFamily, rainbow_vertices
from localrainbow.core import (
    Edge,
    Embedding,
    UniformHypergraph,
    embedding_blocks,
    make_family,
)

from .witness import ViolationWitness, witness_from_copy

logger = logging.getLogger(__name__)

ATTACK_PATTERNS: tuple[str, ...] = ("sp3", "sp4_1", "sp4_2", "sunflower", "clique")
"""Pattern names accepted by `attack`."""

_PATTERN_ID = re.compile(r"^\s*([a-z_0-9]+?)\s*(?:\(\s*([0-9,\s]*)\))?\s*$")

CLIQUE_SCAN_LIMIT = 1 << 20
"""Largest number of p-subsets the clique search scans directly."""

VertexMap = tuple[int, ...]


def parse_attack_pattern(
    pattern: str, r: int
) -> tuple[str, tuple[int, ...], UniformHypergraph]:
    """Parse an attack pattern id.

    Parameters
    ----------
    pattern : str
        Pattern id, see the module docstring.
    r : int
        Uniformity of the attacked family.

    Returns
    -------
    tuple
        `(name, params, hypergraph)`.

    Raises
    ------
    ValueError
        If the id is malformed, unknown or does not fit the uniformity.
    """
    match = _PATTERN_ID.match(pattern.lower())
    if match is None or match.group(1) not in ATTACK_PATTERNS:
        raise ValueError(
            f"Unknown attack pattern '{pattern}', expected one of "
            f"{', '.join(ATTACK_PATTERNS)}."
        )
    name, args = match.groups()
    params = tuple(int(a) for a in args.split(",") if a.strip()) if args else ()

    if name in ("sp3", "sp4_1", "sp4_2"):
        if params:
            raise ValueError(f"Pattern '{name}' takes no parameters, got {params}.")
        if r != 3:
            raise ValueError(f"Pattern '{name}' is 3-uniform, family has r={r}.")
        if name == "sp3":
            return name, params, make_family("sp3")
        return name, params, make_family("sp1" if name == "sp4_1" else "sp2", 4)

    if name == "sunflower":
        if len(params) != 2:
            raise ValueError(f"Pattern 'sunflower' takes (d, t), got {params}.")
        d, t = params
        if t < 4:
            raise ValueError(f"Sunflower attack needs at least 4 petals, got {t}.")
        return name, params, make_family("sunflower", d, t, r=r)

    if len(params) != 1:
        raise ValueError(f"Pattern 'clique' takes (p,), got {params}.")
    return name, params, make_family("clique", params[0], r=r)


def _pairs(vertices: Sequence[int], width: int = 2) -> list[tuple[int, ...]]:
    """Consecutive disjoint chunks of `width` vertices, the remainder dropped."""
    return [
        tuple(vertices[i : i + width])
        for i in range(0, len(vertices) - width + 1, width)
    ]


def _sp3(family: ColoringFamily) -> Optional[VertexMap]:
    n, k = family.n, family.k
    y_count = min(k**4 + 1, max(2, n // 2))
    if n - y_count < 4:
        return None
    ys = range(y_count)
    zs = _pairs(range(y_count, n))

    # pairs z with equal vectors f_y(y' + z) over all y, y'
    buckets: defaultdict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for z in zs:
        buckets[tuple(family.color(y, (u, *z)) for y in ys for u in ys)].append(z)

    for group in buckets.values():
        for z1, z2 in combinations(group, 2):
            xs = (*z1, *z2)
            seen: dict[tuple[int, ...], int] = {}
            for y in ys:
                profile = tuple(family.color(x, (*z1, y)) for x in xs)
                if profile in seen:
                    return (seen[profile], *z1, y, *z2)
                seen[profile] = y
    return None


def _sp4_1(family: ColoringFamily) -> Optional[VertexMap]:
    n = family.n
    a_count = n // 3
    anchors = range(a_count)
    pairs = _pairs(range(a_count, n))
    if a_count < 2 or len(pairs) < 3:
        return None

    colors = {a: [family.color(a, (a, *e)) for e in pairs] for a in anchors}
    triples = []
    for indices in combinations(range(len(pairs)), 3):
        agreeing = [a for a in anchors if len({colors[a][i] for i in indices}) == 1]
        if len(agreeing) >= 2:
            triples.append((indices, agreeing))
    triples.sort(key=lambda item: -len(item[1]))

    for indices, agreeing in triples:
        for middle in range(3):
            e2 = pairs[indices[middle]]
            e1, e3 = (pairs[indices[o]] for o in range(3) if o != middle)
            watchers = (*e1, *e2, *e3)
            seen: dict[tuple[int, ...], int] = {}
            for a in agreeing:
                profile = tuple(family.color(v, (a, *e2)) for v in watchers)
                if profile in seen:
                    return (*e1, seen[profile], *e2, a, *e3)
                seen[profile] = a
    return None


def _sp4_2(family: ColoringFamily) -> Optional[VertexMap]:
    n = family.n
    single_count = n // 3
    singles = range(n - single_count, n)
    pairs = _pairs(range(n - single_count))
    if single_count < 3 or len(pairs) < 2:
        return None

    for U, V in combinations(pairs, 2):
        for a2 in singles:
            eu, ev = (a2, *U), (a2, *V)
            if family.color(a2, eu) != family.color(a2, ev):
                continue
            candidates = [
                a
                for a in singles
                if a != a2 and family.color(a, eu) == family.color(a, ev)
            ]
            firsts = [
                a
                for a in candidates
                if all(family.color(u, (a, *U)) == family.color(u, eu) for u in U)
            ]
            thirds = [
                a
                for a in candidates
                if all(family.color(v, (a, *V)) == family.color(v, ev) for v in V)
            ]
            for a1 in firsts:
                a3 = next((a for a in thirds if a != a1), None)
                if a3 is not None:
                    return (a1, *U, a2, *V, a3)
    return None


def _sunflower(family: ColoringFamily, d: int, t: int) -> Optional[VertexMap]:
    n, r = family.n, family.r
    width = r - d
    core = tuple(range(d))
    chunks = _pairs(range(d, n), width)
    if len(chunks) < 2:
        return None

    # petals whose colors agree under every core vertex
    buckets: defaultdict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for chunk in chunks:
        buckets[tuple(family.color(x, core + chunk) for x in core)].append(chunk)

    candidates = []
    for group in buckets.values():
        for p1, p2 in combinations(group, 2):
            e, f = core + p1, core + p2
            outside = [
                v
                for v in range(d, n)
                if v not in e and v not in f
                and family.color(v, e) == family.color(v, f)
            ]
            candidates.append((p1, p2, outside))
    candidates.sort(key=lambda item: -len(item[2]))

    for p1, p2, outside in candidates:
        if len(outside) < (t - 2) * width:
            break
        extra = _pairs(outside, width)
        watchers = (*p1, *p2)
        seen: dict[tuple[int, ...], tuple[int, ...]] = {}
        for q in extra:
            profile = tuple(family.color(z, core + q) for z in watchers)
            if profile in seen:
                q1 = seen[profile]
                others = [o for o in extra if o not in (q1, q)][: t - 4]
                petals = (p1, p2, q1, q, *others)
                return core + tuple(v for petal in petals for v in petal)
            seen[profile] = q
    return None


def _peel(
    family: ColoringFamily, b: int, edges: Sequence[Edge]
) -> list[tuple[Edge, ...]]:
    """Split off triples of edges sharing a color under `f_b` while 2k+1 remain."""
    by_color: defaultdict[int, list[Edge]] = defaultdict(list)
    for edge in edges:
        by_color[family.color(b, edge)].append(edge)

    triples = []
    left = len(edges)
    while left >= 2 * family.k + 1:
        group = next(g for g in by_color.values() if len(g) >= 3)
        triples.append(tuple(group[:3]))
        del group[:3]
        left -= 3
    return triples


def _close_clique(
    family: ColoringFamily,
    p: int,
    hat1: tuple[int, ...],
    hat2: tuple[int, ...],
    agreeing: Sequence[int],
) -> Optional[VertexMap]:
    watchers = sorted(set(hat1) | set(hat2))
    if len(watchers) + len(agreeing) < p:
        return None

    edges = list(combinations(agreeing, family.r))
    triple_of = {
        b: {edge: triple for triple in _peel(family, b, edges) for edge in triple}
        for b in watchers
    }

    for e0 in edges:
        if not all(e0 in triple_of[b] for b in watchers):
            continue
        chosen = set(watchers) | set(e0)
        for b in watchers:
            mates = [e for e in triple_of[b][e0] if e != e0]
            chosen |= set(min(mates, key=lambda e: len(set(e) - chosen)))
        if len(chosen) > p:
            continue
        padding = [a for a in agreeing if a not in chosen]
        chosen |= set(padding[: p - len(chosen)])
        return tuple(sorted(chosen))
    return None


def _clique(family: ColoringFamily, p: int) -> Optional[VertexMap]:
    n, r = family.n, family.r
    side_a = range(n // 2)
    hats = list(combinations(range(n // 2, n), r - 1))
    if not side_a or len(hats) < 2:
        return _scan_cliques(family, p)

    colors = np.array(
        [[family.color(a, (a, *hat)) for hat in hats] for a in side_a], dtype=np.int64
    )
    same = colors[:, :, None] == colors[:, None, :]
    first, second = np.triu_indices(len(hats), k=1)
    counts = same.sum(axis=0)[first, second]

    for index in np.argsort(-counts, kind="stable"):
        i, j = int(first[index]), int(second[index])
        agreeing = [side_a[a] for a in np.flatnonzero(same[:, i, j])]
        if len(agreeing) < r:
            break
        vertex_map = _close_clique(family, p, hats[i], hats[j], agreeing)
        if vertex_map is not None:
            return vertex_map
    return _scan_cliques(family, p)


def _scan_cliques(family: ColoringFamily, p: int) -> Optional[VertexMap]:
    """First p-subset, in lexicographic order, that no member sees rainbow."""
    K = make_family("clique", p, r=family.r)
    block_size = max(1, (1 << 22) // (p * K.m))
    scanned = 0
    for verts, ranks in embedding_blocks(K, family.n, block_size):
        rainbow = rainbow_vertices(family.colors, verts, ranks)
        bad = np.flatnonzero(~rainbow.any(axis=1))
        if bad.size:
            return tuple(int(v) for v in verts[bad[0]])
        scanned += len(verts)
        if scanned >= CLIQUE_SCAN_LIMIT:
            logger.debug(f"Stopped the clique scan after {scanned} subsets.")
            return None
    return None


def attack(family: ColoringFamily, pattern: str) -> Optional[ViolationWitness]:
    """Run the pigeonhole search for `pattern` against `family`.

    Parameters
    ----------
    family : ColoringFamily
        Family to attack.
    pattern : str
        One of ``sp3``, ``sp4_1``, ``sp4_2``, ``sunflower(d,t)``, ``clique(p)``.

    Returns
    -------
    ViolationWitness or None
        The witness when the search closes a copy, None otherwise.

    Raises
    ------
    ValueError
        If the pattern id is invalid for the uniformity of `family`.

    Examples
    --------
    >>> from localrainbow.colorings import constant_family
    >>> attack(constant_family(8, 3), "sp3").embedding.map
    (0, 2, 3, 1, 4, 5)
    """
    name, params, H = parse_attack_pattern(pattern, family.r)
    if H.n > family.n:
        logger.info(f"Pattern '{pattern}' does not fit in {family.n} vertices.")
        return None

    if name == "sp3":
        vertex_map = _sp3(family)
    elif name == "sp4_1":
        vertex_map = _sp4_1(family)
    elif name == "sp4_2":
        vertex_map = _sp4_2(family)
    elif name == "sunflower":
        vertex_map = _sunflower(family, *params)
    else:
        vertex_map = _clique(family, *params)

    if vertex_map is None:
        logger.info(f"Attack '{pattern}' found no copy on {family.n} vertices.")
        return None
    witness = witness_from_copy(family, Embedding(H, family.n, vertex_map))
    if witness is None:
        raise RuntimeError(
            f"Attack '{pattern}' closed a copy {vertex_map} without clashes."
        )
    logger.info(f"Attack '{pattern}' succeeded on copy {vertex_map}.")
    return witness
