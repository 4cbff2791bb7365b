import json

import pytest

from localrainbow.cli import RunConfig, main, run
from localrainbow.colorings import ColoringFamily


@pytest.fixture(autouse=True)
def _no_thread_override(monkeypatch):
    monkeypatch.delenv("RAINBOW_THREADS", raising=False)


def _main(*args) -> int:
    """Run the command line quietly."""
    return main([str(arg) for arg in (*args, "-q")])


def _construct(method, n, path) -> int:
    return _main("construct", "--method", method, "--n", n, "--output", path)


def test_construct_and_verify(tmp_path):
    """Test that a constructed family is written and verified."""
    family_path = tmp_path / "bucket.rlcf"
    assert _construct("deterministic", 8, family_path) == 0
    family = ColoringFamily.load(family_path)
    assert (family.n, family.r, family.k) == (8, 3, 7)

    sidecar = json.loads((tmp_path / "bucket.rlcf.json").read_text())
    assert sidecar["schema_version"] == 1
    assert sidecar["config"]["command"] == "construct"
    assert sidecar["summary"]["k"] == 7

    report = tmp_path / "verify.json"
    status = _main(
        "verify", "--family", family_path, "--pattern", "lp(3)", "--output", report
    )
    assert status == 0
    assert json.loads(report.read_text())["local"]


def test_verify_violation(tmp_path):
    """Test that a refuted family exits with status 1 and reports the witness."""
    family_path = tmp_path / "constant.rlcf"
    _construct("constant", 6, family_path)
    report = tmp_path / "verify.json"
    status = _main(
        "verify", "--family", family_path, "--pattern", "sp3", "--output", report
    )
    assert status == 1
    data = json.loads(report.read_text())
    assert not data["local"]
    assert data["witness"]["embedding"] == [0, 1, 2, 3, 4, 5]


def test_verify_hypergraph_file(tmp_path, sp3):
    """Test a pattern given as a JSON file."""
    family_path = tmp_path / "injective.rlcf"
    _construct("injective", 6, family_path)
    pattern = tmp_path / "sp3.json"
    pattern.write_text(json.dumps(sp3.to_dict()))
    assert _main("verify", "--family", family_path, "--hypergraph", pattern) == 0


def test_attack(tmp_path):
    """Test that the sp3 search refutes the single-color family."""
    family_path = tmp_path / "constant.rlcf"
    _construct("constant", 8, family_path)
    assert _main("attack", "--family", family_path, "--pattern", "sp3") == 1


def test_solve(tmp_path):
    """Test the exit status of decisions and of minimization."""
    assert _main("solve", "--n", 5, "--pattern", "tp3", "--k", 2) == 1

    report = tmp_path / "solve.json"
    status = _main("solve", "--n", 5, "--pattern", "tp(2)", "--min", "--output", report)
    assert status == 0
    data = json.loads(report.read_text())
    assert data["bracket"] == {"lo": 2, "hi": 2, "exact": True}
    assert ColoringFamily.load(tmp_path / "solve.rlcf").k == 2


def test_solve_min_tight_path(tmp_path):
    """Test that the tight path on five vertices gets an exact bracket."""
    report = tmp_path / "tp3.json"
    status = _main("solve", "--n", 5, "--pattern", "tp3", "--min", "--output", report)
    assert status == 0
    assert json.loads(report.read_text())["bracket"] == {
        "lo": 3,
        "hi": 3,
        "exact": True,
    }


def test_solve_needs_k():
    """Test that a decision without a color count exits with status 2."""
    assert _main("solve", "--n", 5, "--pattern", "tp3") == 2


def test_classify(tmp_path):
    """Test the classification report."""
    report = tmp_path / "classify.json"
    assert _main("classify", "--r", 2, "--edges", 2, "--output", report) == 0
    data = json.loads(report.read_text())
    assert (data["classes"], data["two_ll"]) == (2, 0)
    assert data["config"]["params"]["edges"] == 2


def test_decide2ll(capsys):
    """Test the printed decision."""
    assert _main("decide2ll", "--pattern", "tp3") == 0
    out = capsys.readouterr().out
    assert ": 2LL, witness order (" in out
    assert _main("decide2ll", "--pattern", "matching(3)") == 0
    assert "NOT2LL, witness order None" in capsys.readouterr().out


def test_sunflower():
    """Test the exit status of the sunflower search."""
    assert _main("sunflower", "--pattern", "matching(4)", "--petals", 4) == 0
    assert _main("sunflower", "--pattern", "matching(4)", "--petals", 5) == 1


def test_bridge(capsys):
    """Test that the printed hypergraph has the edges of the vectors."""
    assert _main("bridge", "--vectors", "1100,0011") == 0
    assert json.loads(capsys.readouterr().out)["edges"] == [[0, 1], [2, 3]]


def test_invalid_parameters_exit(capsys):
    """Test that invalid parameters exit with status 2 and a message."""
    assert _main("construct", "--method", "tce", "--n", 6, "--r", 2) == 2
    assert "error" in capsys.readouterr().err


def test_missing_file_exit(tmp_path):
    """Test that a missing family file exits with status 2."""
    missing = tmp_path / "missing.rlcf"
    assert _main("verify", "--family", missing, "--pattern", "sp3") == 2


def test_run_unknown_command():
    """Test that an unknown command raises an error."""
    with pytest.raises(ValueError):
        run(RunConfig("nope"))
