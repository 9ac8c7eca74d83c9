"""
Shared fixtures for parcom tests.
"""
import pytest

from parcom.graph import Graph, build_graph, set_worker_budget
from parcom.quality import Partition
from tests.helpers import BARBELL_EDGES, TWO_TRIANGLE_EDGES


@pytest.fixture(autouse=True)
def single_worker_budget():
    """Every test starts and ends with the default budget of one worker."""
    set_worker_budget(1)
    yield
    set_worker_budget(1)


@pytest.fixture
def barbell() -> Graph:
    """Two triangles {0,1,2} and {3,4,5} joined by the edge {2,3}."""
    return build_graph(6, BARBELL_EDGES)


@pytest.fixture
def two_triangles() -> Graph:
    return build_graph(6, TWO_TRIANGLE_EDGES)


@pytest.fixture
def triangle_partition() -> Partition:
    return Partition([0, 0, 0, 1, 1, 1])


@pytest.fixture
def path_graph() -> Graph:
    return build_graph(2, [(0, 1)])


@pytest.fixture
def edgeless_graph() -> Graph:
    return build_graph(5, [])
