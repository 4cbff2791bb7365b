import numpy as np
import pytest

from localrainbow.analysis import verify_local
from localrainbow.core import enumerate_hypergraphs, make_family
from localrainbow.solver import (
    ColorBracket,
    SolveVerdict,
    backtrack_exists,
    brute_force_exists,
    exists_local_coloring,
    min_colors,
    search,
)


def test_verdict_exit_codes():
    """Test the process exit status of every verdict."""
    assert [verdict.exit_code for verdict in SolveVerdict] == [0, 1, 2]


def test_pigeonhole(tp3):
    """Test that fewer colors than edges are refuted without search."""
    certificate = exists_local_coloring(5, 3, tp3, 2)
    assert certificate.verdict is SolveVerdict.UNSAT
    assert certificate.reductions == ("pigeonhole",)
    assert certificate.complete
    assert certificate.family is None


def test_single_edge_is_sat():
    """Test that a single edge is local with one color."""
    certificate = exists_local_coloring(5, 3, make_family("matching", 1), 1)
    assert certificate.verdict is SolveVerdict.SAT
    assert certificate.family.k == 1


def test_injective_when_colors_suffice():
    """Test that one color per host edge is always enough."""
    certificate = exists_local_coloring(4, 3, make_family("tp", 2), 4)
    assert certificate.verdict is SolveVerdict.SAT
    assert verify_local(certificate.family, make_family("tp", 2)) is None


@pytest.mark.parametrize(
    "n, r, H, k",
    [
        (4, 3, make_family("tp", 2), 2),
        (3, 2, make_family("tp", 2, r=2), 2),
        (4, 2, make_family("matching", 2, r=2), 1),
        (5, 3, make_family("matching", 1), 1),
    ],
)
def test_solver_agrees_with_brute_force(n, r, H, k):
    """Test the solver against exhaustive enumeration."""
    expected = brute_force_exists(n, r, H, k)
    assert expected is not None
    certificate = exists_local_coloring(n, r, H, k)
    assert (certificate.verdict is SolveVerdict.SAT) == expected
    if expected:
        assert verify_local(certificate.family, H) is None


def test_threads_agree():
    """Test that parallel branches reach the same verdict."""
    H = make_family("tp", 2)
    single = exists_local_coloring(4, 3, H, 2)
    parallel = exists_local_coloring(4, 3, H, 2, threads=2)
    assert single.verdict is parallel.verdict is SolveVerdict.SAT
    assert verify_local(parallel.family, H) is None
    assert np.array_equal(single.family.colors, parallel.family.colors)


def test_budget_exhausted(tp3, monkeypatch):
    """Test that a branch out of budget gives an inconclusive verdict."""
    monkeypatch.setattr(search, "_solve_branch", lambda task: (None, {}, task[4]))
    certificate = exists_local_coloring(6, 3, tp3, 3, budget=30)
    assert certificate.verdict is SolveVerdict.INCONCLUSIVE
    assert not certificate.complete
    assert certificate.verdict.exit_code == 2
    assert certificate.nodes == 30


@pytest.mark.parametrize(
    "n, r, k", [(5, 3, 3), (6, 2, 3), (6, 3, 0)],
)
def test_invalid_parameters(sp3, n, r, k):
    """Test that small hosts, wrong uniformities and zero colors raise."""
    with pytest.raises(ValueError):
        exists_local_coloring(n, r, sp3, k)


def test_certificate_to_dict(tp3):
    """Test the certificate JSON."""
    data = exists_local_coloring(5, 3, tp3, 2).to_dict("out.rlcf")
    assert data["verdict"] == "UNSAT"
    assert data["family"] == "out.rlcf"
    assert data["pattern"] == tp3.to_dict()
    assert data["complete"]


def test_min_colors_two_edges():
    """Test that two edges need exactly two colors."""
    H = make_family("tp", 2)
    bracket = min_colors(5, 3, H)
    assert (bracket.lo, bracket.hi) == (2, 2)
    assert bracket.exact
    assert verify_local(bracket.family, H) is None


def test_min_colors_single_edge():
    """Test that a single edge needs one color."""
    assert min_colors(5, 3, make_family("matching", 1)).to_dict() == {
        "lo": 1,
        "hi": 1,
        "exact": True,
    }


def test_min_colors_bracket(tp3):
    """Test that a capped search leaves a bracket open."""
    bracket = min_colors(5, 3, tp3, k_max=2)
    assert (bracket.lo, bracket.hi) == (3, 10)
    assert not bracket.exact
    assert verify_local(bracket.family, tp3) is None


def test_brute_force_too_large(tp3):
    """Test that instances with too many variables are skipped."""
    assert brute_force_exists(6, 3, tp3, 3, max_variables=4) is None


def test_color_bracket_exact():
    """Test the exactness flag."""
    assert ColorBracket(3, 3).exact
    assert not ColorBracket(3, 4).exact


def test_refuted_and_exhausted_branches_are_inconclusive(tp3, monkeypatch):
    """Test that UNSAT needs every branch refuted."""
    outcomes = iter([False, None, False])
    monkeypatch.setattr(search, "_solve_branch", lambda task: (next(outcomes), {}, 1))
    assert exists_local_coloring(6, 3, tp3, 3).verdict is SolveVerdict.INCONCLUSIVE


def test_min_colors_tight_path_exact(tp3):
    """Test that the tight path needs exactly three colors on five vertices."""
    bracket = min_colors(5, 3, tp3)
    assert (bracket.lo, bracket.hi) == (3, 3)
    assert bracket.exact
    assert bracket.family.k == 3
    assert verify_local(bracket.family, tp3) is None


def test_host_symmetry_is_recorded(tp3):
    """Test the reductions of a searched instance."""
    certificate = exists_local_coloring(5, 3, tp3, 3)
    assert certificate.verdict is SolveVerdict.SAT
    assert "host-symmetry" in certificate.reductions
    assert certificate.nodes >= 0


_SMALL_PATTERNS = [(r, H) for r in (2, 3) for H in enumerate_hypergraphs(r, 3, 4)]


@pytest.mark.parametrize("r, H", _SMALL_PATTERNS)
def test_solver_agrees_with_backtracking(r, H):
    """Test three colors for three edges against an independent search."""
    expected = backtrack_exists(4, r, H, 3)
    assert expected is not None
    certificate = exists_local_coloring(4, r, H, 3)
    assert certificate.verdict is (
        SolveVerdict.SAT if expected else SolveVerdict.UNSAT
    )


@pytest.mark.parametrize(
    "n, r, H, k",
    [
        (4, 3, make_family("tp", 2), 2),
        (4, 2, make_family("tp", 2, r=2), 1),
        (3, 2, make_family("tp", 2, r=2), 2),
    ],
)
def test_backtracking_agrees_with_brute_force(n, r, H, k):
    """Test the two exhaustive searches against each other."""
    assert backtrack_exists(n, r, H, k) == brute_force_exists(n, r, H, k)


def test_monotone_in_colors(tp3):
    """Test that adding a color never destroys a local coloring."""
    verdicts = [exists_local_coloring(5, 3, tp3, k).verdict for k in range(2, 6)]
    assert SolveVerdict.INCONCLUSIVE not in verdicts
    first = verdicts.index(SolveVerdict.SAT)
    assert all(verdict is SolveVerdict.SAT for verdict in verdicts[first:])
    assert all(verdict is SolveVerdict.UNSAT for verdict in verdicts[:first])


def test_monotone_in_hosts(tp3):
    """Test that a larger host never needs fewer colors."""
    verdicts = [exists_local_coloring(n, 3, tp3, 3).verdict for n in range(5, 8)]
    assert SolveVerdict.INCONCLUSIVE not in verdicts
    refuted = [verdict is SolveVerdict.UNSAT for verdict in verdicts]
    assert refuted == sorted(refuted)
