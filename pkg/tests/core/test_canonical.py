from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localrainbow.core import (
    FAMILY_NAMES,
    UniformHypergraph,
    canonical_form,
    enumerate_hypergraphs,
    is_isomorphic,
    make_family,
    twin_classes,
    vertex_orbits,
)


@st.composite
def hypergraphs(draw, r: int = 3, max_n: int = 7, max_m: int = 5):
    """Random r-graphs, isolated vertices allowed."""
    n = draw(st.integers(r, max_n))
    candidates = list(combinations(range(n), r))
    edges = draw(
        st.lists(st.sampled_from(candidates), max_size=max_m, unique=True)
    )
    return UniformHypergraph(r, n, tuple(edges))


@st.composite
def relabeled_pairs(draw):
    """A random hypergraph and a random relabeling of it."""
    H = draw(hypergraphs())
    permutation = draw(st.permutations(range(H.n)))
    return H, H.relabel(permutation)


def _incidence_graph(H: UniformHypergraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from((("v", v) for v in H.vertices), side=0)
    graph.add_nodes_from((("e", i) for i in range(H.m)), side=1)
    graph.add_edges_from((("v", v), ("e", i)) for i, e in enumerate(H.edges) for v in e)
    return graph


def _networkx_isomorphic(H1: UniformHypergraph, H2: UniformHypergraph) -> bool:
    return H1.n == H2.n and nx.is_isomorphic(
        _incidence_graph(H1),
        _incidence_graph(H2),
        node_match=lambda a, b: a["side"] == b["side"],
    )


def test_twin_classes_tp3(tp3):
    """Test that the tight path has no twins."""
    assert twin_classes(tp3) == [(0,), (1,), (2,), (3,), (4,)]


def test_twin_classes_clique():
    """Test that all vertices of a clique are twins."""
    assert twin_classes(make_family("clique", 5)) == [(0, 1, 2, 3, 4)]


@settings(max_examples=60, deadline=None)
@given(relabeled_pairs())
def test_canonical_form_invariant(pair):
    """Test that relabeled hypergraphs share their canonical form."""
    H, relabeled = pair
    assert canonical_form(H)[0] == canonical_form(relabeled)[0]
    assert is_isomorphic(H, relabeled)


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_canonical_relabeling(H):
    """Test that the returned relabeling maps the input onto its canonical form."""
    canon, relabeling = canonical_form(H)
    assert H.relabel(relabeling.labels()) == canon


@settings(max_examples=80, deadline=None)
@given(hypergraphs(max_n=6, max_m=4), hypergraphs(max_n=6, max_m=4))
def test_is_isomorphic_against_networkx(H1, H2):
    """Test isomorphism against incidence-graph isomorphism."""
    assert is_isomorphic(H1, H2) == _networkx_isomorphic(H1, H2)


def test_named_families_pairwise():
    """Test that the fixed named 3-graphs are pairwise non-isomorphic."""
    named = [make_family(name) for name in ("tp3", "sp3", "lc3", "tce", "lce")]
    for H1, H2 in combinations(named, 2):
        assert not is_isomorphic(H1, H2)


@pytest.mark.parametrize("name", FAMILY_NAMES[:5])
def test_is_isomorphic_reflexive(name):
    """Test that every named 3-graph is isomorphic to itself reversed."""
    H = make_family(name)
    assert is_isomorphic(H, H.relabel(list(reversed(H.vertices))))


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_canonical_form_idempotent(H):
    """Test that a canonical form is its own canonical form."""
    canon = canonical_form(H)[0]
    assert canonical_form(canon)[0] == canon


def test_isomorphism_matches_canonical_forms(rng):
    """Test isomorphism against canonical-form equality on enumerated classes."""
    classes = [H for m in range(1, 5) for H in enumerate_hypergraphs(3, m, 7)]
    shuffled = [H.relabel(rng.permutation(H.n).tolist()) for H in classes]
    canon = [canonical_form(H)[0] for H in shuffled]
    for i, j in combinations(range(len(classes)), 2):
        assert is_isomorphic(shuffled[i], classes[j]) == (canon[i] == canon[j])
    for H, relabeled in zip(classes, shuffled):
        assert is_isomorphic(H, relabeled)


def test_vertex_orbits_tp3(tp3):
    """Test that the reversal is the only symmetry of the tight path."""
    assert vertex_orbits(tp3) == [(0, 4), (1, 3), (2,)]


def test_vertex_orbits_matching(m3):
    """Test that the matching is vertex-transitive."""
    assert vertex_orbits(m3) == [tuple(range(9))]


@settings(max_examples=60, deadline=None)
@given(relabeled_pairs())
def test_vertex_orbits_refine_twins(pair):
    """Test that orbits are unions of twin classes and survive relabeling."""
    H, relabeled = pair
    orbits = vertex_orbits(H)
    assert sorted(v for orbit in orbits for v in orbit) == list(H.vertices)
    for cls in twin_classes(H):
        assert any(set(cls) <= set(orbit) for orbit in orbits)
    assert sorted(map(len, orbits)) == sorted(map(len, vertex_orbits(relabeled)))
