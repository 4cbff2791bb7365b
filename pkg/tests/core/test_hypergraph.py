from itertools import combinations
from math import comb

import numpy as np
import pytest

from localrainbow.core import (
    Embedding,
    UniformHypergraph,
    colex_ranks,
    complete_edges,
    edge_rank,
    edge_unrank,
)


@pytest.mark.parametrize("n, r", [(5, 2), (7, 3), (8, 4)])
def test_edge_rank_matches_complete_edges(n, r):
    """Test that row i of the complete host is the edge of rank i."""
    edges = complete_edges(n, r)
    assert edges.shape == (comb(n, r), r)
    for i, edge in enumerate(edges.tolist()):
        assert edge_rank(edge) == i
        assert edge_unrank(i, r) == tuple(edge)


def test_colex_ranks_vectorized():
    """Test that the vectorized ranks agree with the scalar ones."""
    edges = complete_edges(9, 3)
    assert np.array_equal(colex_ranks(edges), np.arange(len(edges)))


def test_complete_edges_prefix():
    """Test that the host on n vertices is a prefix of the host on n + 1."""
    small, large = complete_edges(6, 3), complete_edges(7, 3)
    assert np.array_equal(large[: len(small)], small)


def test_edge_rank_order_independent():
    """Test that the rank does not depend on the vertex order in the edge."""
    assert edge_rank((4, 2, 3)) == edge_rank((2, 3, 4)) == 9


@pytest.mark.parametrize("rank, r", [(-1, 3), (0, 0)])
def test_edge_unrank_invalid(rank, r):
    """Test that negative ranks and empty edges are rejected."""
    with pytest.raises(ValueError):
        edge_unrank(rank, r)


def test_edges_normalized():
    """Test that edges are sorted on construction."""
    H = UniformHypergraph(3, 5, [(4, 3, 2), (2, 1, 0)])
    assert H.edges == ((0, 1, 2), (2, 3, 4))
    assert H.m == 2


@pytest.mark.parametrize(
    "r, n, edges",
    [
        (3, 4, [(0, 1)]),  # wrong size
        (3, 4, [(0, 1, 1)]),  # repeated vertex
        (3, 4, [(0, 1, 4)]),  # out of range
        (3, 4, [(0, 1, 2), (2, 1, 0)]),  # duplicate
        (1, 4, [(0,)]),  # uniformity
    ],
)
def test_invalid_edges(r, n, edges):
    """Test that malformed edge lists raise an error."""
    with pytest.raises(ValueError):
        UniformHypergraph(r, n, edges)


def test_spanning_flag():
    """Test that a spanning hypergraph cannot have isolated vertices."""
    with pytest.raises(ValueError):
        UniformHypergraph(3, 4, [(0, 1, 2)], spanning=True)


def test_isolated_vertices():
    """Test adding and removing isolated vertices."""
    H = UniformHypergraph(3, 6, [(0, 2, 4), (2, 4, 5)])
    assert H.isolated_vertices() == (1, 3)
    core = H.without_isolated_vertices()
    assert core.n == 4
    assert core.edges == ((0, 1, 2), (1, 2, 3))
    padded = core.with_isolated_vertices(2)
    assert padded.n == 6
    assert padded.isolated_vertices() == (4, 5)


def test_degree(tp3):
    """Test vertex degrees of the tight path."""
    assert [tp3.degree(v) for v in tp3.vertices] == [1, 2, 3, 2, 1]


def test_relabel(sp3):
    """Test relabeling by a permutation."""
    reversed_sp3 = sp3.relabel([5, 4, 3, 2, 1, 0])
    assert reversed_sp3.edges == ((0, 1, 2), (2, 3, 4), (3, 4, 5))


def test_relabel_not_injective(sp3):
    """Test that a non-injective map raises an error."""
    with pytest.raises(ValueError):
        sp3.relabel([0, 0, 1, 2, 3, 4])


def test_subgraph(tp3):
    """Test subgraph inclusion against a clique."""
    clique = UniformHypergraph(3, 5, tuple(combinations(range(5), 3)))
    assert tp3.is_subgraph_of(clique)
    assert not clique.is_subgraph_of(tp3)


def test_dict_round_trip(lc3):
    """Test the hypergraph JSON."""
    data = lc3.to_dict()
    assert data == {"r": 3, "n": 6, "edges": [[0, 1, 3], [0, 2, 5], [1, 2, 4]]}
    assert UniformHypergraph.from_dict(data) == lc3


def test_from_dict_missing_key():
    """Test that an incomplete JSON raises an error."""
    with pytest.raises(ValueError):
        UniformHypergraph.from_dict({"r": 3, "edges": []})


def test_from_edges_infers_parameters():
    """Test inference of the vertex count and the uniformity."""
    H = UniformHypergraph.from_edges([(0, 1), (1, 3)])
    assert (H.r, H.n) == (2, 4)


def test_embedding(sp3):
    """Test the image edges of an embedding."""
    embedding = Embedding(sp3, 8, (7, 6, 5, 4, 3, 2))
    assert embedding.image_edges == ((5, 6, 7), (4, 5, 6), (2, 3, 4))
    host = UniformHypergraph(3, 8, embedding.image_edges)
    assert embedding.is_copy_in(host)


@pytest.mark.parametrize(
    "vertex_map", [(0, 1, 2, 3, 4), (0, 0, 1, 2, 3, 4), (0, 1, 2, 3, 4, 8)]
)
def test_embedding_invalid(sp3, vertex_map):
    """Test that short, non-injective or out-of-host maps raise an error."""
    with pytest.raises(ValueError):
        Embedding(sp3, 8, vertex_map)
