import pytest

from localrainbow.core import (
    erdos_rado_bounds,
    make_family,
    parse_family,
    separated_pair_overlap,
)


@pytest.mark.parametrize(
    "name, edges",
    [
        ("tp3", ((0, 1, 2), (1, 2, 3), (2, 3, 4))),
        ("sp3", ((0, 1, 2), (1, 2, 3), (3, 4, 5))),
        ("lc3", ((0, 1, 3), (0, 2, 5), (1, 2, 4))),
    ],
)
def test_three_edge_exceptions(name, edges):
    """Test the edges of the fixed named 3-graphs."""
    assert make_family(name).edges == edges


def test_sp1():
    """Test the path alternating loose and tight steps, loose first."""
    H = make_family("sp1", 4)
    assert H.edges == ((0, 1, 2), (2, 3, 4), (3, 4, 5), (5, 6, 7))


def test_sp2():
    """Test the path alternating tight and loose steps, tight first."""
    H = make_family("sp2", 4)
    assert H.edges == ((0, 1, 2), (1, 2, 3), (3, 4, 5), (4, 5, 6))


def test_graph_path():
    """Test the loose path in the graph case."""
    assert make_family("lp", 3, r=2).edges == ((0, 1), (1, 2), (2, 3))


def test_sunflower_layout():
    """Test that petals take consecutive vertices after the core."""
    H = make_family("sunflower", 1, 3)
    assert H.edges == ((0, 1, 2), (0, 3, 4), (0, 5, 6))


def test_clique():
    """Test the number of edges of a clique."""
    H = make_family("clique", 5, r=3)
    assert (H.n, H.m) == (5, 10)


@pytest.mark.parametrize(
    "name, params, r",
    [
        ("foo", (), 3),  # unknown
        ("tp3", (), 4),  # fixed 3-graph
        ("tp3", (2,), 3),  # takes no parameter
        ("sunflower", (1,), 3),  # parameter count
        ("sunflower", (3, 4), 3),  # core as large as an edge
        ("clique", (2,), 3),  # fewer vertices than r
        ("sp1", (3,), 4),  # 3-uniform only
        ("lp", (0,), 3),  # no edge
    ],
)
def test_make_family_invalid(name, params, r):
    """Test that invalid family requests raise an error."""
    with pytest.raises(ValueError):
        make_family(name, *params, r=r)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("tp3", make_family("tp3")),
        ("SP3", make_family("sp3")),
        ("clique(4)", make_family("clique", 4)),
        ("sunflower( 2, 4 )", make_family("sunflower", 2, 4)),
        ("matching(3)", make_family("matching", 3)),
    ],
)
def test_parse_family(text, expected):
    """Test the family id grammar."""
    assert parse_family(text) == expected


@pytest.mark.parametrize("text", ["sp3(", "clique(a)", "", "(3)"])
def test_parse_family_malformed(text):
    """Test that malformed ids raise an error."""
    with pytest.raises(ValueError):
        parse_family(text)


@pytest.mark.parametrize(
    "name, t, expected",
    [("lp", 5, 1), ("lp", 7, 1), ("tp", 6, 2), ("tp", 8, 2), ("matching", 4, 0)],
)
def test_separated_pair_overlap(name, t, expected):
    """Test the overlap of separated edge pairs on paths and matchings."""
    assert separated_pair_overlap(make_family(name, t)) == expected


@pytest.mark.parametrize("r, m, expected", [(3, 4, (27, 163)), (2, 3, (4, 9))])
def test_erdos_rado_bounds(r, m, expected):
    """Test the classical sunflower bounds."""
    assert erdos_rado_bounds(r, m) == expected
