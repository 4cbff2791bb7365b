"""Families of vertex-indexed edge colorings and their binary file format.

Binary format (little endian)::

    magic   4 bytes  b"RLCF"
    version u8       1
    n       u32      number of host vertices
    r       u8       edge size
    k       u32      number of colors
    seed    u64      seed of the construction
    colors  u32[rows * comb(n, r)]

Row `v` holds the colors of the edges of the complete host, indexed by the
colexicographic rank of the sorted edge. A coloring family has `n` rows, a single
edge coloring one row.
"""

import struct
from collections.abc import Iterable
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Union

import numpy as np
from numpy.typing import NDArray
from typing_extensions import Self

from localrainbow.core import edge_rank

MAGIC = b"RLCF"
VERSION = 1
_HEADER = struct.Struct("<4sBIBIQ")
MAX_COLORS = np.iinfo(np.uint32).max


def encode_rlcf(n: int, r: int, k: int, seed: int, colors: NDArray) -> bytes:
    """Serialize a color array with its header."""
    header = _HEADER.pack(MAGIC, VERSION, n, r, k, seed % 2**64)
    return header + np.ascontiguousarray(colors, dtype="<u4").tobytes()


def decode_rlcf(data: bytes) -> tuple[int, int, int, int, NDArray]:
    """Parse a serialized color array.

    Parameters
    ----------
    data : bytes
        File content.

    Returns
    -------
    tuple
        `(n, r, k, seed, colors)`, colors of shape (rows, comb(n, r)).

    Raises
    ------
    ValueError
        If the magic, the version or the payload size is wrong.
    """
    if len(data) < _HEADER.size:
        raise ValueError(f"File of {len(data)} bytes is shorter than the header.")
    magic, version, n, r, k, seed = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ValueError(f"Bad magic {magic!r}, expected {MAGIC!r}.")
    if version != VERSION:
        raise ValueError(f"Unsupported format version {version}.")

    payload = np.frombuffer(data, dtype="<u4", offset=_HEADER.size)
    width = comb(n, r)
    if width == 0 or payload.size % width != 0:
        raise ValueError(
            f"Payload of {payload.size} colors is not a whole number of rows of "
            f"{width} edges."
        )
    colors = payload.reshape(payload.size // width, width).astype(np.uint32)
    return n, r, k, seed, colors


def rainbow_vertices(colors: NDArray, verts: NDArray, ranks: NDArray) -> NDArray:
    """For every copy and every copy vertex, whether its coloring is rainbow.

    Parameters
    ----------
    colors : numpy.ndarray
        Color array of shape (n, comb(n, r)).
    verts : numpy.ndarray
        Copy vertices, shape (copies, h).
    ranks : numpy.ndarray
        Edge ranks of each copy, shape (copies, m).

    Returns
    -------
    numpy.ndarray
        Boolean array of shape (copies, h).
    """
    seen = np.sort(colors[verts[:, :, None], ranks[:, None, :]], axis=2)
    return np.all(np.diff(seen, axis=2) != 0, axis=2)


@dataclass(frozen=True, eq=False)
class ColoringFamily:
    """One edge coloring of the complete r-graph on n vertices per vertex.

    Examples
    --------
    >>> import numpy as np
    >>> family = ColoringFamily(4, 3, 1, np.ones((4, 4), dtype=np.uint32))
    >>> family.color(2, (0, 1, 3))
    1
    """

    n: int
    """Number of vertices of the complete host."""

    r: int
    """Edge size."""

    k: int
    """Number of colors, colors are 1..k."""

    colors: NDArray = field(repr=False)
    """Read-only array of shape (n, comb(n, r)), `colors[v, rank]` is f_v(edge)."""

    provenance: str = "explicit"
    """Construction tag."""

    seed: int = 0
    """Seed of the construction, 0 for deterministic ones."""

    def __post_init__(self) -> None:
        """Validate the color array.

        Raises
        ------
        ValueError
            If the shape is wrong or a color is outside 1..k.
        """
        if self.n < self.r or self.r < 2:
            raise ValueError(f"Invalid host parameters n={self.n}, r={self.r}.")
        if not 1 <= self.k <= MAX_COLORS:
            raise ValueError(
                f"Color count must lie in 1..{MAX_COLORS}, got {self.k}."
            )

        colors = np.array(self.colors, dtype=np.uint32)
        expected = (self.n, comb(self.n, self.r))
        if colors.shape != expected:
            raise ValueError(
                f"Color array has shape {colors.shape}, expected {expected}."
            )
        if colors.size and (colors.min() < 1 or colors.max() > self.k):
            raise ValueError(
                f"Colors must lie in 1..{self.k}, found {colors.min()}..{colors.max()}."
            )
        colors.setflags(write=False)
        object.__setattr__(self, "colors", colors)

    def color(self, v: int, edge: Iterable[int]) -> int:
        """Color of `edge` under the coloring of vertex `v`."""
        return int(self.colors[v, edge_rank(edge)])

    def with_colors(
        self, colors: NDArray, k: int, provenance: str
    ) -> "ColoringFamily":
        """A family on the same host with new colors."""
        return ColoringFamily(self.n, self.r, k, colors, provenance, self.seed)

    def __eq__(self, other: object) -> bool:
        """Equal hosts, color counts and colors."""
        if not isinstance(other, ColoringFamily):
            return NotImplemented
        return (self.n, self.r, self.k) == (other.n, other.r, other.k) and bool(
            np.array_equal(self.colors, other.colors)
        )

    __hash__ = None  # type: ignore[assignment]

    def to_bytes(self) -> bytes:
        """Binary encoding."""
        return encode_rlcf(self.n, self.r, self.k, self.seed, self.colors)

    @classmethod
    def from_bytes(cls, data: bytes, provenance: str = "file") -> Self:
        """Decode a family written by `to_bytes`.

        Raises
        ------
        ValueError
            If the data is malformed or does not hold one row per vertex.
        """
        n, r, k, seed, colors = decode_rlcf(data)
        if colors.shape[0] != n:
            raise ValueError(
                f"Expected {n} rows for a family, found {colors.shape[0]}."
            )
        return cls(n, r, k, colors, provenance, seed)

    def save(self, path: Union[str, Path]) -> None:
        """Write the family to `path`.

        Examples
        --------
        >>> family = ColoringFamily(5, 3, 1, np.ones((5, 10), dtype=np.uint32))
        >>> family.save(family_dir / "small.rlcf")
        >>> ColoringFamily.load(family_dir / "small.rlcf") == family
        True
        """
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def load(cls, path: Union[str, Path]) -> Self:
        """Read a family written by `save`.

        Examples
        --------
        >>> bucket = ColoringFamily.load(family_dir / "deterministic.rlcf")
        >>> bucket.n, bucket.r, bucket.k
        (7, 3, 7)
        >>> ColoringFamily.load(family_dir / "constant.rlcf").k
        1
        """
        return cls.from_bytes(Path(path).read_bytes(), provenance=f"file:{path}")

    def summary(self) -> dict[str, Union[int, str]]:
        """JSON-serializable description without the colors."""
        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "provenance": self.provenance,
            "seed": self.seed,
        }
