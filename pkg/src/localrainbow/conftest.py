"""Sybil collection of the doctests, with the family files they read.

See https://sybil.readthedocs.io/en/latest/use.html#pytest
"""

from pathlib import Path

import pytest
from pytest import TempPathFactory
from sybil import Sybil
from sybil.parsers.codeblock import PythonCodeBlockParser
from sybil.parsers.doctest import DocTestParser

from localrainbow.colorings import constant_family, deterministic_family


@pytest.fixture(scope="module")
def family_dir(tmp_path_factory: TempPathFactory) -> Path:
    """Directory holding ``constant.rlcf`` and ``deterministic.rlcf``.

    The first is the single-color family on the complete 3-graph with 6 vertices,
    the second the 7-color bucket family on 7 vertices.

    Parameters
    ----------
    tmp_path_factory : TempPathFactory
        Temporary path factory from pytest.

    Returns
    -------
    Path
        Directory of the family files.
    """
    directory = tmp_path_factory.mktemp("families")
    constant_family(6, 3).save(directory / "constant.rlcf")
    deterministic_family(7, 3).save(directory / "deterministic.rlcf")
    return directory


pytest_collect_file = Sybil(
    parsers=[
        DocTestParser(),
        PythonCodeBlockParser(future_imports=["print_function"]),
    ],
    pattern="*.py",
    fixtures=["family_dir"],
).pytest()
