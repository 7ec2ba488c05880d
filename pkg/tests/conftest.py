import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from mcg_colorings.colorings import construct, dumps_coloring  # noqa: E402
from mcg_colorings.dehn_thurston import LatticeColoring, dumps_lattice  # noqa: E402
from mcg_colorings.progress import set_verbose  # noqa: E402
from mcg_colorings.torus import TorusCurve  # noqa: E402


@pytest.fixture(autouse=True)
def quiet():
    set_verbose(False)
    yield
    set_verbose(False)


@pytest.fixture
def red_blue():
    """Level 1: subtree of (2,1) red, subtree of (1,2) blue"""
    return construct(1, ["red", "blue"])


@pytest.fixture
def blue_special():
    """Level 0, everything red except the R-orbit of (1,0)"""
    return construct(0, ["red"], {TorusCurve(1, 0): "blue"})


@pytest.fixture
def write_doc(tmp_path):
    """Write a coloring (or raw text) to a file and return its path as a string"""
    counter = {"n": 0}

    def write(value, name=None):
        counter["n"] += 1
        path = tmp_path / (name or f"doc{counter['n']}.json")
        if isinstance(value, LatticeColoring):
            text = dumps_lattice(value)
        elif isinstance(value, str):
            text = value
        else:
            text = dumps_coloring(value)
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
