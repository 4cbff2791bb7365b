from itertools import combinations

import pytest

from localrainbow.core import (
    SunflowerWitness,
    UniformHypergraph,
    complete_edges,
    find_sunflower,
    make_family,
)


@pytest.mark.parametrize("d, m", [(0, 3), (1, 4), (2, 5)])
def test_sunflower_family(d, m):
    """Test that a sunflower is found in itself with its own core."""
    H = make_family("sunflower", d, m)
    witness = find_sunflower(H, m)
    assert witness is not None
    assert witness.core == tuple(range(d))
    assert set(witness.petals) == H.edge_set


def test_no_sunflower(tp3):
    """Test that the tight path has no sunflower with three petals."""
    assert find_sunflower(tp3, 3) is None
    assert find_sunflower(tp3, 2) is not None


def test_sunflower_in_link():
    """Test a sunflower whose petals meet in a high-degree vertex."""
    H = UniformHypergraph(3, 7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5)])
    witness = find_sunflower(H, 3)
    assert witness is not None
    assert witness.is_valid()
    assert witness.core == (0,)


def test_erdos_rado_threshold(rng):
    """Test that 163 random triples on 12 vertices always contain 4 petals."""
    edges = complete_edges(12, 3)
    for _ in range(20):
        chosen = edges[rng.choice(len(edges), size=163, replace=False)]
        H = UniformHypergraph(3, 12, tuple(map(tuple, chosen.tolist())))
        witness = find_sunflower(H, 4)
        assert witness is not None
        assert len(witness.petals) == 4
        assert set(witness.petals) <= H.edge_set


def test_complete_host_core_size():
    """Test that four petals in K_6 need a core of two vertices."""
    H = UniformHypergraph(3, 6, tuple(combinations(range(6), 3)))
    witness = find_sunflower(H, 4)
    assert witness is not None
    assert len(witness.core) == 2
    assert find_sunflower(UniformHypergraph(3, 6, ((0, 1, 2),)), 2) is None


def test_invalid_witness():
    """Test the validation of hand-made witnesses."""
    assert not SunflowerWitness((0,), ((0, 1, 2), (0, 1, 3))).is_valid()
    assert SunflowerWitness((), ((0, 1, 2), (3, 4, 5))).is_valid()


def test_invalid_petal_count(tp3):
    """Test that fewer than one petal raises an error."""
    with pytest.raises(ValueError):
        find_sunflower(tp3, 0)


def test_witness_dict():
    """Test the witness JSON."""
    witness = find_sunflower(make_family("matching", 2), 2)
    assert witness.to_dict() == {"core": [], "petals": [[0, 1, 2], [3, 4, 5]]}
