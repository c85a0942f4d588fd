import random

import pytest

from conftest import atlas
from mayatupi import split
from mayatupi.certificates import AUDIT_FALLBACK, NO, YES, NoCertificate, SplitPartition, verify_certificate
from mayatupi.graph import Graph, complete, cycle, disjoint_union, mask_of, path, star, write_graph6
from mayatupi.oracle import is_split
from mayatupi.split import (
    degree_threshold, extract_split_certificate, find_2k2, is_split_sequence, maximal_clique, recognize_split,
)

TWO_K2 = Graph(4, [(0, 1), (2, 3)])


def test_degree_threshold_on_p4():
    order, m = degree_threshold(path(4))
    assert order[:2] == [1, 2]
    assert m == 2
    assert is_split_sequence(path(4))


@pytest.mark.parametrize('g', [path(4), star(5), complete(4), Graph(3)])
def test_split_graphs(g):
    result = recognize_split(g)
    assert result.verdict == YES
    assert result.route == 'split'
    assert verify_certificate(g, result.certificate)


@pytest.mark.parametrize('g, name', [
    (TWO_K2, '2K2'),
    (cycle(4), 'C4'),
    (cycle(5), 'C5'),
    (path(5), '2K2'),
])
def test_witness_order(g, name):
    result = recognize_split(g)
    assert result.verdict == NO
    assert result.certificate.obstruction_id == name
    assert verify_certificate(g, result.certificate, graph_class='split')


def test_find_2k2():
    u, v, x, y = find_2k2(TWO_K2)
    assert {frozenset((u, v)), frozenset((x, y))} == {frozenset((0, 1)), frozenset((2, 3))}
    assert find_2k2(cycle(5)) is None


def test_maximal_clique_follows_the_order():
    g = path(4)
    assert maximal_clique(g, 0, [0, 1, 2, 3]) == mask_of([0, 1])
    assert maximal_clique(g, mask_of([2])) == mask_of([1, 2])


def test_c5_grows_from_the_missed_vertex():
    # K = {0, 1}; edge 2-3 outside, 2 misses only 0, and 0's outside neighbour 4 sees 3
    assert extract_split_certificate(cycle(5)) == NoCertificate('C5', (2, 3, 4, 0, 1))


def test_incomparable_misses_give_c4():
    assert extract_split_certificate(cycle(4)) == NoCertificate('C4', (2, 3, 0, 1))


def test_vertex_without_outside_neighbours_is_traded():
    # the clique {0, 1} leaves the edge 2-3 outside; 0 sees nothing outside, so 2 replaces it
    found = extract_split_certificate(path(4), [0, 1, 2, 3], 0)
    assert found == SplitPartition(frozenset({1, 2}), frozenset({0, 3}))


def test_missed_vertex_with_a_neighbour_seeing_neither_end():
    # P5 0-1-2-3-4: K = {1, 2}; 3 misses 1, and 1's outside neighbour 0 misses 3 and 4
    found = extract_split_certificate(path(5))
    assert found.obstruction_id == '2K2'
    assert verify_certificate(path(5), found, graph_class='split')


def test_agrees_with_oracle():
    for g in atlas(range(1, 8)):
        result = recognize_split(g)
        assert (result.verdict == YES) == is_split(g)
        assert AUDIT_FALLBACK not in result.flags, write_graph6(g)
        assert verify_certificate(g, result.certificate, graph_class='split')


def _random_graphs(count, seed, n_max=16):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        p = rng.random()
        yield Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_extraction_certifies_random_graphs():
    for g in _random_graphs(2000, seed=3):
        found = extract_split_certificate(g)
        assert found is not None, write_graph6(g)
        assert verify_certificate(g, found, graph_class='split'), write_graph6(g)
        assert isinstance(found, SplitPartition) == is_split_sequence(g)


@pytest.mark.slow
def test_agrees_with_oracle_on_random_graphs():
    for g in _random_graphs(10_000, seed=5):
        result = recognize_split(g)
        assert (result.verdict == YES) == is_split(g), write_graph6(g)
        assert AUDIT_FALLBACK not in result.flags


def test_failed_extraction_falls_back_with_a_flag(monkeypatch, caplog):
    monkeypatch.setattr(split, 'extract_split_certificate', lambda g, order, m: None)
    g = disjoint_union(cycle(5), complete(2))
    result = recognize_split(g)
    assert result.verdict == NO
    assert AUDIT_FALLBACK in result.flags
    assert verify_certificate(g, result.certificate, graph_class='split')
    assert 'searching for a pattern' in caplog.text
