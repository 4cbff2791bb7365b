import numpy as np
import pytest

from localrainbow.colorings import ColoringFamily, constant_family
from localrainbow.core import UniformHypergraph, make_family


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(42)


@pytest.fixture
def tp3() -> UniformHypergraph:
    """Tight path with three edges."""
    return make_family("tp3")


@pytest.fixture
def sp3() -> UniformHypergraph:
    """Two tight edges followed by a loose one."""
    return make_family("sp3")


@pytest.fixture
def lc3() -> UniformHypergraph:
    """Loose cycle with three edges."""
    return make_family("lc3")


@pytest.fixture
def m3() -> UniformHypergraph:
    """Matching with three edges."""
    return make_family("matching", 3)


@pytest.fixture
def constant_8() -> ColoringFamily:
    """Single-color family on the complete 3-graph with 8 vertices."""
    return constant_family(8, 3)
