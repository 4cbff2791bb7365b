from itertools import permutations
from math import factorial

import pytest

from localrainbow.core import VertexOrder, is_isomorphic, make_family
from localrainbow.locality import (
    Status,
    classify_all,
    count_witness_orders,
    decide_2ll,
    is_2ll_under,
    random_orders_fail,
)


@pytest.mark.parametrize("name", ["tp3", "sp3", "lc3", "tce", "lce"])
def test_named_2ll(name):
    """Test that the named exceptions are 2LL with a verifying witness."""
    H = make_family(name)
    record = decide_2ll(H)
    assert record.status is Status.TWO_LL
    assert is_2ll_under(H, record.witness)
    assert record.orders_examined == factorial(H.n)


@pytest.mark.parametrize(
    "name, params", [("matching", (3,)), ("lp", (3,)), ("sunflower", (1, 3))]
)
def test_named_not_2ll(name, params):
    """Test 3-edge hypergraphs that are not 2LL."""
    record = decide_2ll(make_family(name, *params))
    assert record.status is Status.NOT_TWO_LL
    assert record.witness is None


def test_isolated_vertices_keep_status(tp3, m3):
    """Test that isolated vertices do not change the decision."""
    padded = decide_2ll(tp3.with_isolated_vertices(2))
    assert padded.is_2ll
    assert is_2ll_under(tp3.with_isolated_vertices(2), padded.witness)
    assert not decide_2ll(m3.with_isolated_vertices(1)).is_2ll


def test_witness_count_brute_force(tp3, sp3):
    """Test the witness order count against all permutations."""
    for H in (tp3, sp3):
        expected = sum(
            is_2ll_under(H, VertexOrder.from_sequence(sequence))
            for sequence in permutations(H.vertices)
        )
        assert expected > 0
        assert count_witness_orders(H) == expected


def test_no_witness_for_matching(m3):
    """Test that no order makes the 3-matching 2LL."""
    assert count_witness_orders(m3) == 0
    assert random_orders_fail(m3, trials=500, seed=3)


def test_three_edge_exceptions():
    """Test that exactly three classes of 3-graphs with three edges are 2LL."""
    records = classify_all(3, 3)
    two_ll = [record.hypergraph for record in records if record.is_2ll]
    assert len(two_ll) == 3
    for name in ("tp3", "sp3", "lc3"):
        assert any(is_isomorphic(H, make_family(name)) for H in two_ll)
    for record in records:
        if not record.is_2ll:
            assert count_witness_orders(record.hypergraph) == 0


def test_graph_exception():
    """Test that the path is the only 2LL graph with three edges."""
    records = classify_all(2, 3)
    two_ll = [record.hypergraph for record in records if record.is_2ll]
    assert len(records) == 5
    assert len(two_ll) == 1
    assert is_isomorphic(two_ll[0], make_family("lp", 3, r=2))


@pytest.mark.parametrize("r, m", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2)])
def test_two_edges_never_2ll(r, m):
    """Test that no hypergraph with at most two edges is 2LL."""
    assert not any(record.is_2ll for record in classify_all(r, m))


def test_parallel_classification():
    """Test that worker processes give the same records."""
    assert classify_all(3, 2, threads=2) == classify_all(3, 2)


def test_record_dict(tp3):
    """Test the classification report entry."""
    data = decide_2ll(tp3).to_dict()
    assert data["status"] == "2LL"
    assert data["canonical"] == tp3.to_dict()
    assert sorted(data["witness"]) == [1, 2, 3, 4, 5]


def test_invalid_threads():
    """Test that a non-positive worker count raises an error."""
    with pytest.raises(ValueError):
        classify_all(3, 2, threads=0)


@pytest.mark.parametrize("name", ["tp3", "sp3", "lc3"])
def test_states_examined_on_witness(name):
    """Test that a witness search visits at least its own chain of prefix sets."""
    H = make_family(name)
    record = decide_2ll(H)
    assert H.n + 1 <= record.states_examined <= 2**H.n
    assert decide_2ll(H).states_examined == record.states_examined
    assert record.to_dict()["states_examined"] == record.states_examined


def test_states_examined_on_refutation(m3):
    """Test that a refutation visits the empty prefix and stays within all sets."""
    record = decide_2ll(m3)
    assert 1 <= record.states_examined <= 2**m3.n
    assert record.orders_examined == factorial(m3.n)


def test_random_orders_fail_on_every_refuted_class():
    """Test ten thousand random orders on every 3-edge class that is not 2LL."""
    refuted = [record for record in classify_all(3, 3) if not record.is_2ll]
    assert refuted
    for seed, record in enumerate(refuted):
        assert random_orders_fail(record.hypergraph, trials=10_000, seed=seed)
