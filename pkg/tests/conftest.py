import pytest

from ordtile.data import generators
from ordtile.data.dataload import write_graph
from ordtile.datatypes import OrderedGraph


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks over every small pattern")


@pytest.fixture
def edge():
    return OrderedGraph.edge()


@pytest.fixture
def k3():
    return OrderedGraph.complete(3)


@pytest.fixture
def path5():
    return generators.path5()


@pytest.fixture
def barrier8():
    return generators.barrier8()


@pytest.fixture
def skip_path7():
    return generators.skip_path7()


@pytest.fixture
def k22():
    return generators.K22()


@pytest.fixture
def k212():
    return generators.complete_multipartite((2, 1, 2))


@pytest.fixture
def graph_file(tmp_path):
    """Write an ordered graph to a temporary file and return its path as a string."""
    def write(G, name="graph.txt"):
        path = tmp_path / name
        write_graph(G, str(path))
        return str(path)
    return write

