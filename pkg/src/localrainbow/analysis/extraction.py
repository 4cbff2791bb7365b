"""Copies of 2-locally-large hypergraphs inside monochromatic vertex sets."""

import logging
from collections.abc import Iterable
from typing import Optional

from localrainbow.colorings import ColoringFamily, RamseyColoring
from localrainbow.core import Embedding, UniformHypergraph, VertexOrder
from localrainbow.locality import decide_2ll

from .witness import ViolationWitness, witness_from_copy

logger = logging.getLogger(__name__)


def extract_from_monochromatic(
    g: RamseyColoring,
    S: Iterable[int],
    H: UniformHypergraph,
    family: ColoringFamily,
    base_order: VertexOrder,
) -> Optional[ViolationWitness]:
    """Embed a 2-locally-large pattern into a monochromatic set and certify it.

    The vertex `y` of `S` with the largest base rank is set aside and `H` is
    placed on the remaining vertices of `S` so that its witness order agrees with
    the base order. Two edges sharing a bucket of a copy vertex then share its
    color, since their (r+1)-extensions by the vertex itself or by `y` carry the
    same matrix under `g`.

    Parameters
    ----------
    g : RamseyColoring
        Product coloring of `family` under `base_order`.
    S : iterable of int
        Vertex set on which `g` is constant.
    H : UniformHypergraph
        Pattern.
    family : ColoringFamily
        Family the witness refers to.
    base_order : VertexOrder
        Order used to build `g`.

    Returns
    -------
    ViolationWitness or None
        The witness, None if `S` has fewer than `|V(H)| + 1` vertices or `H` is
        not 2-locally-large.

    Raises
    ------
    ValueError
        If `g`, `family`, `base_order` and `H` do not share a host and uniformity,
        or `S` is not monochromatic under `g`.
    """
    vertices = sorted(set(S))
    if (g.n, g.r) != (family.n, family.r) or base_order.n != family.n:
        raise ValueError(
            f"Product coloring on (n={g.n}, r={g.r}), family on "
            f"(n={family.n}, r={family.r}), order on {base_order.n} vertices."
        )
    if H.r != family.r:
        raise ValueError(f"Pattern is {H.r}-uniform, family colors {family.r}-edges.")
    if not g.is_monochromatic(vertices):
        raise ValueError(f"Vertex set {vertices} is not monochromatic.")

    if len(vertices) < H.n + 1:
        logger.info(f"Set of {len(vertices)} vertices is too small for {H.n} + 1.")
        return None
    record = decide_2ll(H)
    if record.witness is None:
        logger.info("Pattern is not 2-locally-large, nothing to extract.")
        return None

    below_top = base_order.sort(vertices)[:-1]
    vertex_map = tuple(below_top[record.witness.rank(v) - 1] for v in range(H.n))
    witness = witness_from_copy(family, Embedding(H, family.n, vertex_map))
    if witness is None:
        raise RuntimeError(
            f"Copy {vertex_map} in a monochromatic set has a rainbow vertex."
        )
    return witness
