import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gmsbench.graph import graph_from_edges


@pytest.fixture
def k4():
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def p3():
    return graph_from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def c6():
    return graph_from_edges(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def star5():
    return graph_from_edges(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def k4_minus_edge():
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
