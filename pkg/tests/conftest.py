import pathlib

import pytest

from tsr.graph import parse_graph

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def load(name: str):
    return parse_graph((FIXTURES / name).read_text())


@pytest.fixture
def fig1():
    """Max-degree-2 instance: terrible 4-cycle (w1..w4 at ids 1,3,6,7) plus a P2."""
    return load("fig1.tsr")


@pytest.fixture
def fig2():
    """Disjoint union of a threshold-2 C4 (1..4) and a threshold-1 P2 (5,6)."""
    return load("fig2.tsr")


@pytest.fixture
def fig5_tree():
    return load("fig5_tree.tsr")


@pytest.fixture
def theta():
    return load("theta.tsr")


@pytest.fixture
def theta_r1():
    return load("theta_r1.tsr")


@pytest.fixture
def k4():
    return load("k4.tsr")
