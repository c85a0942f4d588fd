import networkx as nx
import pytest

from mayatupi.catalog import intro_example
from mayatupi.graph import Graph


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: runs for more than a few seconds')


@pytest.fixture
def intro():
    """The eight-vertex introductory example; A = {0, 1, 2}"""
    return intro_example()


def atlas(orders):
    """Every graph of the given orders from the networkx atlas, one per isomorphism class"""
    wanted = set(orders)
    return [Graph.from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() in wanted]
