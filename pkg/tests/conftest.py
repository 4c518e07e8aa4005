import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from committee_select import Graph


@pytest.fixture
def triangle():
    return Graph.from_edges([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p3():
    return Graph.from_edges([(0, 1), (1, 2)])


@pytest.fixture
def p4():
    return Graph.from_edges([(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star4():
    # node 0 is the hub
    return Graph.from_edges([(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
