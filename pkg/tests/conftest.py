import networkx as nx
import pytest

from app.core.dataclasses import IntersectionGraph
from tests.utils import bipartite, complete_graph, cycle_graph, from_nx, path_graph, random_corpus


@pytest.fixture
def empty10() -> IntersectionGraph:
    return IntersectionGraph.from_edges(10, [])


@pytest.fixture
def path4() -> IntersectionGraph:
    return path_graph(4)


@pytest.fixture
def c4() -> IntersectionGraph:
    return cycle_graph(4)


@pytest.fixture
def c5() -> IntersectionGraph:
    return cycle_graph(5)


@pytest.fixture
def k4() -> IntersectionGraph:
    return complete_graph(4)


@pytest.fixture
def petersen() -> IntersectionGraph:
    return from_nx(nx.petersen_graph())


@pytest.fixture(scope="session")
def small_corpus() -> list[IntersectionGraph]:
    return random_corpus(60, 10, seed=7)


@pytest.fixture
def special_bipartite():
    """
    Nodes 2, 3 form X and attribute 1 forms Y; attributes 0, 1, 2 with nodes 2, 3
    make the 3-special bipartite path [0, 2, 1, 3, 2]; attribute 3 joins the rest.
    """
    return bipartite(5, 4, {0: [0, 2], 1: [2, 3], 2: [1, 3], 3: [0, 1, 4]})
