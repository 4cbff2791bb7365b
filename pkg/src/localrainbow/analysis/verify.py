"""Exhaustive check of the local rainbow property."""

import logging
from typing import Optional

import numpy as np

from localrainbow.colorings import ColoringFamily, rainbow_vertices
from localrainbow.core import Embedding, UniformHypergraph, embedding_blocks

from .witness import ViolationWitness, witness_from_copy

logger = logging.getLogger(__name__)


def verify_local(
    family: ColoringFamily, H: UniformHypergraph, *, block_size: int = 65536
) -> Optional[ViolationWitness]:
    """Check that every copy of `H` is rainbow under one of its vertices.

    Copies are scanned in the order of `enumerate_embeddings`, so the reported
    copy is the first violating one in that order.

    Parameters
    ----------
    family : ColoringFamily
        Family on the complete r-graph.
    H : UniformHypergraph
        Pattern with the same uniformity.
    block_size : int, default=65536
        Copies per vectorized block.

    Returns
    -------
    ViolationWitness or None
        None if the family is local for `H`, otherwise the witness of the first
        violating copy.

    Raises
    ------
    ValueError
        If the uniformities differ or the pattern is larger than the host.

    Examples
    --------
    >>> from localrainbow.colorings import constant_family
    >>> from localrainbow.core import make_family
    >>> witness = verify_local(constant_family(6, 3), make_family("sp3"))
    >>> witness.embedding.map
    (0, 1, 2, 3, 4, 5)
    >>> from localrainbow.colorings import ColoringFamily
    >>> bucket = ColoringFamily.load(family_dir / "deterministic.rlcf")
    >>> verify_local(bucket, make_family("matching", 2)) is None
    True
    """
    if H.r != family.r:
        raise ValueError(f"Pattern is {H.r}-uniform, family colors {family.r}-edges.")
    if H.n > family.n:
        raise ValueError(
            f"Pattern with {H.n} vertices does not fit in a host with {family.n}."
        )
    if H.m <= 1:
        return None

    for verts, ranks in embedding_blocks(H, family.n, block_size):
        rainbow = rainbow_vertices(family.colors, verts, ranks)
        bad = np.flatnonzero(~rainbow.any(axis=1))
        if bad.size:
            embedding = Embedding(H, family.n, tuple(int(v) for v in verts[bad[0]]))
            logger.info(f"Copy {embedding.map} is rainbow under none of its vertices.")
            return witness_from_copy(family, embedding)
    return None
