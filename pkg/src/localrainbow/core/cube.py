"""Bridge between weight-r 0/1 vectors and edges of a complete hypergraph."""

from collections.abc import Iterable

from .hypergraph import Edge, UniformHypergraph


def cube_bridge(vectors: Iterable[str]) -> UniformHypergraph:
    """Hypergraph with one edge per vector, the edge of the coordinates set to 1.

    Parameters
    ----------
    vectors : iterable of str
        0/1 strings of a common length `n` and common Hamming weight `r`. Repeated
        vectors give a single edge.

    Returns
    -------
    UniformHypergraph
        Hypergraph on `n` vertices.

    Raises
    ------
    ValueError
        If no vector is given, a character is not 0 or 1, or lengths or weights
        differ.

    Examples
    --------
    >>> cube_bridge(["1110"]).edges
    ((0, 1, 2),)
    """
    unique = list(dict.fromkeys(vectors))
    if not unique:
        raise ValueError("At least one vector is required.")

    n = len(unique[0])
    r = unique[0].count("1")
    edges = []
    for vector in unique:
        if set(vector) - {"0", "1"}:
            raise ValueError(f"Vector '{vector}' is not a 0/1 string.")
        if len(vector) != n:
            raise ValueError(
                f"Vector '{vector}' has length {len(vector)}, expected {n}."
            )
        if vector.count("1") != r:
            raise ValueError(
                f"Vector '{vector}' has weight {vector.count('1')}, expected {r}."
            )
        edges.append(tuple(i for i, bit in enumerate(vector) if bit == "1"))

    return UniformHypergraph(r, n, tuple(edges))


def edge_to_vector(edge: Iterable[int], n: int) -> str:
    """0/1 string of length `n` with ones exactly on `edge`.

    Examples
    --------
    >>> edge_to_vector((0, 1, 2), 4)
    '1110'
    """
    members = set(edge)
    if any(v < 0 or v >= n for v in members):
        raise ValueError(f"Edge {sorted(members)} leaves 0..{n - 1}.")
    return "".join("1" if i in members else "0" for i in range(n))


def hypergraph_to_vectors(H: UniformHypergraph) -> list[str]:
    """Vectors of all edges of `H`, in edge order."""
    return [edge_to_vector(e, H.n) for e in H.edges]


def vector_to_edge(vector: str) -> Edge:
    """Edge of the coordinates of `vector` set to 1."""
    return tuple(i for i, bit in enumerate(vector) if bit == "1")
