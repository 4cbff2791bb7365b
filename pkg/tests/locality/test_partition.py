from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localrainbow.core import UniformHypergraph, VertexOrder
from localrainbow.locality import bucket_index, is_2ll_under, txi_partition


@st.composite
def ordered_hypergraphs(draw, r: int = 3, max_n: int = 7):
    """A random r-graph with a random order on its vertices."""
    n = draw(st.integers(r, max_n))
    edges = draw(
        st.lists(
            st.sampled_from(list(combinations(range(n), r))),
            min_size=1,
            max_size=6,
            unique=True,
        )
    )
    sequence = draw(st.permutations(range(n)))
    return UniformHypergraph(r, n, tuple(edges)), VertexOrder.from_sequence(sequence)


def test_bucket_index_inside():
    """Test that edges containing x go to the position of x."""
    ranks = (1, 2, 3, 4)
    assert bucket_index((0, 1, 2), 0, ranks, 3) == 1
    assert bucket_index((0, 1, 2), 2, ranks, 3) == 3


def test_bucket_index_outside():
    """Test that edges avoiding x go to r plus its insertion position."""
    ranks = (2, 3, 4, 1)
    assert bucket_index((0, 1, 2), 3, ranks, 3) == 4
    ranks = (1, 3, 4, 2)
    assert bucket_index((0, 1, 2), 3, ranks, 3) == 5


def test_tp3_partition(tp3):
    """Test the buckets of the middle vertex of the tight path."""
    partition = txi_partition(tp3, VertexOrder.identity(5), 2)
    assert partition.bucket(3) == ((0, 1, 2),)
    assert partition.bucket(2) == ((1, 2, 3),)
    assert partition.bucket(1) == ((2, 3, 4),)
    assert partition.large_bucket() == 0


@settings(max_examples=100, deadline=None)
@given(ordered_hypergraphs())
def test_buckets_partition_edges(pair):
    """Test that the buckets of every vertex partition the edges."""
    H, order = pair
    for x in H.vertices:
        buckets = txi_partition(H, order, x).buckets
        assert len(buckets) == 2 * H.r + 1
        assert sorted(e for bucket in buckets for e in bucket) == list(H.edges)


@settings(max_examples=100, deadline=None)
@given(ordered_hypergraphs())
def test_reversal_symmetry(pair):
    """Test that reversing the order mirrors the buckets."""
    H, order = pair
    r = H.r
    for x in H.vertices:
        forward = txi_partition(H, order, x)
        backward = txi_partition(H, order.reverse(), x)
        for i in range(1, r + 1):
            assert forward.bucket(i) == backward.bucket(r + 1 - i)
        for j in range(r + 1, 2 * r + 2):
            assert forward.bucket(j) == backward.bucket(3 * r + 2 - j)
    assert is_2ll_under(H, order) == is_2ll_under(H, order.reverse())


@settings(max_examples=100, deadline=None)
@given(ordered_hypergraphs(), st.data())
def test_adding_edges_keeps_2ll(pair, data):
    """Test that supergraphs on the same vertices stay 2LL under the same order."""
    H, order = pair
    extra = data.draw(
        st.lists(st.sampled_from(list(combinations(H.vertices, H.r))), max_size=3)
    )
    larger = UniformHypergraph(H.r, H.n, tuple(H.edge_set | set(extra)))
    if is_2ll_under(H, order):
        assert is_2ll_under(larger, order)


def test_witness_orders(tp3, sp3, lc3):
    """Test the orders under which the three exceptions are 2LL."""
    assert is_2ll_under(tp3, VertexOrder.from_sequence([2, 3, 0, 1, 4]))
    assert is_2ll_under(sp3, VertexOrder.from_sequence([5, 4, 2, 1, 3, 0]))
    assert is_2ll_under(lc3, VertexOrder.from_sequence([0, 4, 3, 2, 1, 5]))


def test_identity_fails_for_tp3(tp3):
    """Test that the natural order does not make the tight path 2LL."""
    assert not is_2ll_under(tp3, VertexOrder.identity(5))


def test_invalid_arguments(tp3):
    """Test that wrong orders, vertices and bucket indices raise an error."""
    with pytest.raises(ValueError):
        is_2ll_under(tp3, VertexOrder.identity(4))
    with pytest.raises(ValueError):
        txi_partition(tp3, VertexOrder.identity(5), 5)
    with pytest.raises(ValueError):
        txi_partition(tp3, VertexOrder.identity(5), 0).bucket(8)
