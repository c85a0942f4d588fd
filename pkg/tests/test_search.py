import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import atlas
from mayatupi.graph import Graph, complete, cycle, mask_of, path
from mayatupi.search import contains_induced, find_induced, is_induced_copy


def test_finds_an_induced_copy():
    phi = find_induced(path(3), cycle(5))
    assert phi is not None
    assert is_induced_copy(path(3), cycle(5), phi)


def test_induced_not_just_a_subgraph():
    # K4 has a spanning C4 but no induced one
    assert find_induced(cycle(4), complete(4)) is None
    assert find_induced(cycle(4), cycle(5)) is None


def test_within_restricts_host_vertices():
    host = cycle(6)
    assert find_induced(path(3), host, within=mask_of([0, 2, 4])) is None
    phi = find_induced(path(3), host, within=mask_of([3, 4, 5]))
    assert sorted(phi) == [3, 4, 5]
    assert phi[1] == 4


def test_empty_pattern_and_cap():
    assert find_induced(Graph(0), path(3)) == []
    assert find_induced(path(4), path(3)) is None
    with pytest.raises(ValueError):
        find_induced(path(11), path(12))


def test_is_induced_copy_rejects_bad_maps():
    assert not is_induced_copy(path(3), path(3), [0, 0, 1])
    assert not is_induced_copy(path(3), path(3), [0, 1, 5])
    assert not is_induced_copy(path(3), path(3), [0, 2, 1])


@pytest.mark.parametrize('pattern', [path(4), cycle(4), Graph(4, [(0, 1), (2, 3)])])
def test_agrees_with_networkx_matcher(pattern):
    p = pattern.to_networkx()
    for host in atlas([5, 6]):
        expected = GraphMatcher(host.to_networkx(), p).subgraph_is_isomorphic()
        assert contains_induced(pattern, host) == expected


def test_petersen_has_induced_c5_not_c4():
    g = Graph.from_networkx(nx.petersen_graph())
    assert contains_induced(cycle(5), g)
    assert not contains_induced(cycle(4), g)
