import random

import pytest

from conftest import atlas
from mayatupi.certificates import AUDIT_FALLBACK, NO, UNDECIDED, YES, NoCertificate, TC12Partition, verify_certificate
from mayatupi.graph import Graph, complete, cycle, disjoint_union, find_c4, mask_of, parse_graph6, path, write_graph6
from mayatupi.oracle import is_tc12, tc12_bruteforce
from mayatupi.tc12 import (
    base_partition, check_clique_comparability, complete_vertex_over_clique, exact_neighborhoods, lemma_audits,
    merge_partitions, recognize_tc12, reduction_steps, tc12_by_cliques,
)

P3, K3 = path(3), complete(3)


@pytest.mark.parametrize('g, name', [
    (disjoint_union(P3, P3), '2P3'),
    (disjoint_union(P3, K3), 'P3+K3'),
    (disjoint_union(K3, K3), '2K3'),
    (cycle(5), 'C5'),
    (cycle(6), 'C6'),
    (cycle(7), 'C7'),
])
def test_minimal_obstructions_are_named(g, name):
    result = recognize_tc12(g)
    assert result.verdict == NO
    assert result.certificate.obstruction_id == name
    assert verify_certificate(g, result.certificate)


def test_c4_is_a_promise_violation():
    result = recognize_tc12(cycle(4))
    assert result.verdict == UNDECIDED
    assert result.certificate.obstruction_id == 'C4'
    assert result.certificate.promise


@pytest.mark.parametrize('g', [
    path(6),
    disjoint_union(complete(4), path(2), Graph(1)),
    Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),
    Graph(0),
])
def test_members_get_verified_partitions(g):
    result = recognize_tc12(g)
    assert result.verdict == YES
    assert verify_certificate(g, result.certificate)


def _c4_free(orders):
    return [g for g in atlas(orders) if find_c4(g) is None]


def test_agrees_with_oracle_up_to_six():
    for g in _c4_free(range(7)):
        result = recognize_tc12(g)
        assert (result.verdict == YES) == is_tc12(g)
        assert result.verdict != UNDECIDED
        assert verify_certificate(g, result.certificate)
        assert AUDIT_FALLBACK not in result.flags


@pytest.mark.slow
def test_agrees_with_oracle_on_seven():
    for g in _c4_free([7]):
        result = recognize_tc12(g)
        assert (result.verdict == YES) == is_tc12(g)
        assert verify_certificate(g, result.certificate)
        assert AUDIT_FALLBACK not in result.flags


def test_cliques_decision_matches_bruteforce():
    for g in atlas(range(1, 7)):
        assert (tc12_by_cliques(g) is None) == (tc12_bruteforce(g) is None)


def test_exact_neighborhoods_split_by_anchor_trace():
    # anchors 0-1 and 2-3; vertex 4 sees 0 and 2, vertex 5 sees nothing
    g = Graph(6, [(0, 1), (2, 3), (4, 0), (4, 2)])
    nb = exact_neighborhoods(g, (0, 1, 2, 3))
    assert nb.part(0b0101) == {4}
    assert nb.part(0) == {5}
    assert nb.union(range(16)) == 0b110000


def test_exact_neighborhoods_need_a_2k2():
    with pytest.raises(ValueError):
        exact_neighborhoods(path(4), (0, 1, 2, 3))
    with pytest.raises(ValueError):
        exact_neighborhoods(Graph(4, [(0, 1), (2, 3)]), (0, 1, 2, 2))


def test_clique_comparability_finds_c4():
    # clique {0, 1}; 2 sees only 0, 3 sees only 1, and 2-3 is an edge
    g = Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    found = check_clique_comparability(g, [0, 1], 2, 3)
    assert isinstance(found, NoCertificate)
    assert found.obstruction_id == 'C4'
    assert verify_certificate(g, found)


def test_clique_comparability_nested_traces():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (2, 3)])
    assert check_clique_comparability(g, [0, 1], 2, 3) is None


def test_complete_vertex_over_clique():
    # clique {0, 1}; path 2-3-4 with 3 complete to the clique
    g = Graph(5, [(0, 1), (2, 3), (3, 4), (3, 0), (3, 1), (2, 0)])
    assert complete_vertex_over_clique(g, [0, 1], (2, 3, 4)) == 3


def test_complete_vertex_over_clique_validates_input():
    g = Graph(5, [(0, 1), (2, 3), (3, 4), (3, 0), (3, 1)])
    with pytest.raises(ValueError):
        complete_vertex_over_clique(g, [0, 1], (2, 3, 3))
    with pytest.raises(ValueError):
        complete_vertex_over_clique(g, [0, 2], (1, 3, 4))


# anchors 0-1 and 3-6; 2 sees 1 and 3, 4 sees 0 and 1, 5 hangs off 4
FHOG = Graph(7, [(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (3, 6), (4, 5)])


@pytest.mark.parametrize('text', ['FhoG_', 'F_{PG', 'Fms`G'])
def test_reported_graphs_stay_on_the_lemma_pipeline(text):
    g = parse_graph6(text)
    result = recognize_tc12(g)
    assert AUDIT_FALLBACK not in result.flags
    assert verify_certificate(g, result.certificate)
    if result.verdict != UNDECIDED:
        assert (result.verdict == YES) == is_tc12(g)


def test_merge_checks_inner_b_against_the_dropped_vertex():
    result = recognize_tc12(FHOG)
    assert result.verdict == NO
    assert AUDIT_FALLBACK not in result.flags
    assert verify_certificate(FHOG, result.certificate)


def test_one_sided_level_keeps_the_empty_side_edge_in_b():
    nb = exact_neighborhoods(FHOG, (0, 1, 3, 6))
    assert lemma_audits(FHOG, nb) is None
    step = base_partition(FHOG, nb)
    assert step.mode == 'rec2'
    assert step.partition == TC12Partition(frozenset({2}), frozenset({3, 6}))
    assert step.recurse == mask_of([0, 1, 4, 5])


def test_merge_names_the_path_through_the_loose_vertices():
    outer = TC12Partition(frozenset({2}), frozenset({3, 6}))
    inner = TC12Partition(frozenset({0, 1, 4}), frozenset({5}))
    found = merge_partitions(FHOG, outer, inner, 'rec2')
    assert isinstance(found, NoCertificate)
    assert found.obstruction_id == '2P3'
    assert set(found.witness) == {0, 2, 3, 4, 5, 6}
    assert verify_certificate(FHOG, found)


def test_merge_moves_the_missing_neighbours_into_the_clique():
    # outer clique {4}; inner clique {0} misses 4, its neighbour 1 does not
    g = Graph(6, [(4, 2), (4, 3), (2, 3), (0, 1), (1, 4), (1, 5)])
    outer = TC12Partition(frozenset({4}), frozenset({2, 3}))
    inner = TC12Partition(frozenset({0}), frozenset({1, 5}))
    merged = merge_partitions(g, outer, inner)
    assert merged == TC12Partition(frozenset({1, 4}), frozenset({0, 2, 3, 5}))
    assert verify_certificate(g, merged)


def test_n_empty_vertex_can_join_the_clique():
    # anchors 0-1, 2-3; 4 in N_02, 5 in N_01, path 6-7-8 in N_0 with 7 seeing 4 and 5
    g = Graph(9, [(0, 1), (2, 3), (4, 0), (4, 2), (5, 0), (5, 1), (4, 5), (6, 7), (7, 8), (7, 4), (7, 5)])
    nb = exact_neighborhoods(g, (0, 1, 2, 3))
    assert lemma_audits(g, nb) is None
    step = base_partition(g, nb)
    assert step.mode == 'rec1'
    assert step.recurse == mask_of([6, 7, 8])
    result = recognize_tc12(g)
    assert result.verdict == YES
    assert AUDIT_FALLBACK not in result.flags
    assert 7 in result.certificate.A


def test_crossing_mixed_vertices_give_c6():
    g = Graph(6, [(0, 1), (2, 3), (4, 0), (4, 2), (5, 1), (5, 3)])
    found = lemma_audits(g, exact_neighborhoods(g, (0, 1, 2, 3)))
    assert found.obstruction_id == 'C6'
    assert set(found.witness) == set(range(6))


def test_side_complete_audit_names_both_triples():
    g = parse_graph6('Fms`G')
    found = lemma_audits(g, exact_neighborhoods(g, (0, 3, 2, 5)))
    assert found.obstruction_id == '2K3'
    assert set(found.witness) == {0, 2, 3, 4, 5, 6}
    assert verify_certificate(g, found)


def test_no_fallback_on_c4_free_atlas():
    for g in _c4_free(range(8)):
        result = recognize_tc12(g)
        assert AUDIT_FALLBACK not in result.flags, write_graph6(g)
        assert result.verdict != UNDECIDED


def _random_c4_free(count, seed=7):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        n = rng.randint(8, 16)
        p = rng.choice((0.15, 0.2, 0.3))
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if find_c4(g) is None:
            found.append(g)
    return found


def test_random_c4_free_graphs_agree_with_clique_search():
    for g in _random_c4_free(300):
        result = recognize_tc12(g)
        assert AUDIT_FALLBACK not in result.flags, write_graph6(g)
        assert (result.verdict == YES) == (tc12_by_cliques(g) is not None), write_graph6(g)
        assert verify_certificate(g, result.certificate)


def test_reduction_levels_shrink_the_graph():
    for g in _c4_free(range(8)) + _random_c4_free(100, seed=11):
        steps = reduction_steps(g)
        assert len(steps) <= g.order // 3
        for step in steps:
            assert step.removed >= (5 if step.mode == 'rec1' else 3)
