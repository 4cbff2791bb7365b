import pytest

from localrainbow.analysis import verify_local
from localrainbow.colorings import (
    deterministic_family,
    injective_family,
    mixed_radix,
    product_lift,
    ramsey_product_coloring,
)
from localrainbow.core import VertexOrder, make_family


@pytest.mark.parametrize(
    "values, k, expected",
    [((1,), 5, 1), ((1, 1), 3, 1), ((2, 3), 3, 6), ((3, 3, 3), 3, 27)],
)
def test_mixed_radix(values, k, expected):
    """Test the flattening of color tuples, first coordinate most significant."""
    assert mixed_radix(values, k) == expected


def test_lift_is_local_without_isolated_vertices():
    """Test that lifting removes the isolated vertex from the pattern."""
    pattern = make_family("lp", 3)
    base = deterministic_family(8, 3)
    assert verify_local(base, pattern.with_isolated_vertices(1)) is None
    lifted = product_lift(base, range(8))
    assert lifted.k == 7**9
    assert verify_local(lifted, pattern) is None


def test_lift_colors():
    """Test that lifted colors flatten the base color and the anchor colors."""
    base = deterministic_family(6, 3)
    lifted = product_lift(base, [4, 1])
    edge = (0, 2, 5)
    expected = mixed_radix(
        (base.color(3, edge), base.color(4, edge), base.color(1, edge)), base.k
    )
    assert lifted.color(3, edge) == expected
    assert lifted.provenance == "lift"


@pytest.mark.parametrize("anchors", [[0, 0], [0, 6], [-1]])
def test_lift_invalid_anchors(anchors):
    """Test that repeated or out-of-host anchors raise an error."""
    with pytest.raises(ValueError):
        product_lift(deterministic_family(6, 3), anchors)


def test_lift_too_many_colors():
    """Test that lifted color counts beyond 32 bits raise an error."""
    with pytest.raises(ValueError):
        product_lift(deterministic_family(12, 3), range(12))


def test_ramsey_coloring_of_bucket_family():
    """Test that the bucket family gives every 4-edge the same matrix."""
    family = deterministic_family(7, 3)
    g = ramsey_product_coloring(family, VertexOrder.identity(7))
    assert g.n_colors == 1
    assert g.is_monochromatic(range(7))
    assert g.tuple_of((0, 1, 2, 3))[0] == family.color(0, (0, 1, 2))
    assert g.mixed_radix_color((0, 1, 2, 3)) == mixed_radix(
        g.tuple_of((2, 4, 5, 6)), 7
    )


def test_ramsey_coloring_of_injective_family():
    """Test that distinct edges get distinct matrices under the injective family."""
    g = ramsey_product_coloring(injective_family(6, 3), VertexOrder.identity(6))
    assert g.n_colors == 15
    assert not g.is_monochromatic(range(5))
    assert g.is_monochromatic((0, 1, 2, 3))


def test_ramsey_coloring_invalid():
    """Test that a wrong order or a small host raises an error."""
    with pytest.raises(ValueError):
        ramsey_product_coloring(deterministic_family(6, 3), VertexOrder.identity(5))
    with pytest.raises(ValueError):
        ramsey_product_coloring(deterministic_family(3, 3), VertexOrder.identity(3))
