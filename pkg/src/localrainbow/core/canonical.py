"""Canonical labeling and isomorphism of uniform hypergraphs.

The canonical form is computed by individualization-refinement: vertex cells are
refined by the cells of their edge neighbours, the first non-singleton cell is
branched on, and the lexicographically least relabeled edge list over all leaves is
kept. Vertices whose transposition is an automorphism (twins) are branched on once.
"""

from collections.abc import Sequence

from .hypergraph import Edge, UniformHypergraph
from .order import VertexOrder

Cells = list[tuple[int, ...]]


def _swap_is_automorphism(H: UniformHypergraph, u: int, v: int) -> bool:
    swap = {u: v, v: u}
    edge_set = H.edge_set
    for e in H.edges:
        if (u in e) != (v in e):
            image = tuple(sorted(swap.get(x, x) for x in e))
            if image not in edge_set:
                return False
    return True


def twin_classes(H: UniformHypergraph) -> list[tuple[int, ...]]:
    """Partition the vertices into twin classes.

    Two vertices are twins when exchanging them is an automorphism of `H`. The
    relation is an equivalence, so each class is compared through its first vertex.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph.

    Returns
    -------
    list of tuple of int
        Twin classes, each ascending, ordered by smallest vertex.

    Examples
    --------
    >>> from localrainbow.core.families import make_family
    >>> twin_classes(make_family("sp3"))
    [(0,), (1, 2), (3,), (4, 5)]
    """
    classes: list[list[int]] = []
    for v in H.vertices:
        for cls in classes:
            if _swap_is_automorphism(H, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return [tuple(cls) for cls in classes]


def vertex_orbits(H: UniformHypergraph) -> list[tuple[int, ...]]:
    """Orbits of the automorphism group of `H` on its vertices.

    Automorphisms are enumerated by extending partial maps vertex by vertex; a map
    is cut as soon as an edge whose vertices are all mapped leaves the edge set.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph.

    Returns
    -------
    list of tuple of int
        Orbits, each ascending, ordered by smallest vertex.

    Examples
    --------
    >>> from localrainbow.core.families import make_family
    >>> vertex_orbits(make_family("tp3"))
    [(0, 4), (1, 3), (2,)]
    """
    n = H.n
    edge_set = H.edge_set
    closing: list[list[Edge]] = [[] for _ in range(n)]
    for e in H.edges:
        closing[e[-1]].append(e)

    orbits: list[set[int]] = [{v} for v in range(n)]
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> None:
        if v == n:
            for u in range(n):
                orbits[u].add(image[u])
            return
        for target in range(n):
            if used[target]:
                continue
            image[v] = target
            if all(
                tuple(sorted(image[x] for x in e)) in edge_set for e in closing[v]
            ):
                used[target] = True
                extend(v + 1)
                used[target] = False
        image[v] = -1

    extend(0)
    found: list[tuple[int, ...]] = []
    for v in range(n):
        if min(orbits[v]) == v:
            found.append(tuple(sorted(orbits[v])))
    return found


def _refine(cells: Cells, incidence: Sequence[Sequence[Edge]], n: int) -> Cells:
    while True:
        cell_of = [0] * n
        for index, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = index

        refined: Cells = []
        for cell in cells:
            if len(cell) <= 1:
                refined.append(cell)
                continue
            signature = {
                v: tuple(
                    sorted(
                        tuple(sorted(cell_of[u] for u in e if u != v))
                        for e in incidence[v]
                    )
                )
                for v in cell
            }
            for key in sorted(set(signature.values())):
                refined.append(tuple(v for v in cell if signature[v] == key))

        if len(refined) == len(cells):
            return refined
        cells = refined


def canonical_form(H: UniformHypergraph) -> tuple[UniformHypergraph, VertexOrder]:
    """Canonical representative of the isomorphism class of `H`.

    Parameters
    ----------
    H : UniformHypergraph
        Hypergraph, isolated vertices allowed.

    Returns
    -------
    UniformHypergraph
        Canonical representative; equal for two inputs iff they are isomorphic.
    VertexOrder
        Relabeling, vertex `v` of `H` receives canonical label `rank(v) - 1`.

    Examples
    --------
    >>> from localrainbow.core.families import make_family
    >>> canon, relabeling = canonical_form(make_family("tp3"))
    >>> canon.n, canon.m
    (5, 3)
    >>> H = make_family("tp3")
    >>> H.relabel(relabeling.labels()) == canon
    True
    """
    n = H.n
    if n == 0:
        return H, VertexOrder(())

    incidence = [[e for e in H.edges if v in e] for v in range(n)]
    twin_id = [0] * n
    for index, cls in enumerate(twin_classes(H)):
        for v in cls:
            twin_id[v] = index

    best_edges: list[tuple[Edge, ...]] = []
    best_labels: list[tuple[int, ...]] = []

    def leaf(cells: Cells) -> None:
        labels = [0] * n
        for index, cell in enumerate(cells):
            labels[cell[0]] = index
        edges = tuple(sorted(tuple(sorted(labels[v] for v in e)) for e in H.edges))
        if not best_edges or edges < best_edges[0]:
            best_edges[:] = [edges]
            best_labels[:] = [tuple(labels)]

    def search(cells: Cells) -> None:
        cells = _refine(cells, incidence, n)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            leaf(cells)
            return

        tried = set()
        for v in cells[target]:
            if twin_id[v] in tried:
                continue
            tried.add(twin_id[v])
            rest = tuple(u for u in cells[target] if u != v)
            search(cells[:target] + [(v,), rest] + cells[target + 1 :])

    search([tuple(range(n))])

    canon = UniformHypergraph(H.r, n, best_edges[0])
    relabeling = VertexOrder(tuple(label + 1 for label in best_labels[0]))
    return canon, relabeling


def canonical_key(H: UniformHypergraph) -> tuple[int, int, tuple[Edge, ...]]:
    """Sort key of a canonical hypergraph, `(n, m, edges)`."""
    return H.n, H.m, H.edges


def is_isomorphic(H1: UniformHypergraph, H2: UniformHypergraph) -> bool:
    """Whether an edge-preserving vertex bijection maps `H1` onto `H2`.

    Parameters
    ----------
    H1 : UniformHypergraph
        First hypergraph.
    H2 : UniformHypergraph
        Second hypergraph.

    Returns
    -------
    bool
        True iff the two hypergraphs are isomorphic.
    """
    if (H1.r, H1.n, H1.m) != (H2.r, H2.n, H2.m):
        return False
    if sorted(H1.degree(v) for v in H1.vertices) != sorted(
        H2.degree(v) for v in H2.vertices
    ):
        return False
    return canonical_form(H1)[0] == canonical_form(H2)[0]
