import json
from pathlib import Path

import pytest

from conftest import atlas
from mayatupi.certificates import (
    AUDIT_FALLBACK, DECISION_ONLY, GRAPH_CLASSES, NO, PARTITION_OMITTED, YES, MTFourPartition, MTPartition,
    NoCertificate, RecognitionResult, SplitPartition, TC12Partition, _PARTITION_KINDS, _WITNESS_KINDS, as_mt_partition,
    complement_partition, document_class, from_document, no, to_document, two_part_to_four, verify_certificate,
    verify_mt_four_partition, verify_mt_partition, verify_no_certificate, verify_split_partition,
    verify_tc12_partition, yes,
)
from mayatupi.errors import CertificateError
from mayatupi.graph import complete, cycle, disjoint_union, path, write_graph6

SCHEMA = Path(__file__).parent.parent / 'schema' / 'certificate.schema.json'


def _mt(a, n):
    a = frozenset(a)
    return MTPartition(a, frozenset(range(n)) - a)


# ============================================================================
# PARTITIONS
# ============================================================================

def test_intro_partition_accepted(intro):
    assert verify_mt_partition(intro, _mt({0, 1, 2}, 8))


@pytest.mark.parametrize('p, clause', [
    (MTPartition(frozenset({0, 1, 2}), frozenset({2, 3, 4, 5, 6, 7})), 'structural'),
    (MTPartition(frozenset({0, 1, 2}), frozenset({3, 4, 5, 6})), 'structural'),
    (MTPartition(frozenset({0, 1, 2, 9}), frozenset({3, 4, 5, 6, 7})), 'structural'),
    (_mt({0, 1, 2, 6}, 8), 'A-min-degree'),
    (_mt({0, 1}, 8), 'B-max-degree'),
])
def test_intro_partition_rejections(intro, p, clause):
    verdict = verify_mt_partition(intro, p)
    assert not verdict
    assert verdict.clause == clause
    assert 'rejected' in str(verdict)


def test_rejection_names_the_vertices(intro):
    verdict = verify_mt_partition(intro, _mt({0, 1, 2, 6}, 8))
    # 0 is checked first and misses both 1 and 6
    assert verdict.vertices[0] == 0
    assert set(verdict.vertices[1:]) == {1, 6}


def test_four_partition_of_intro(intro):
    four = two_part_to_four(intro, _mt({0, 1, 2}, 8))
    assert four.K == {2}
    assert four.Mbar == {0, 1}
    assert four.S == {5}
    assert four.M == {3, 4, 6, 7}
    assert verify_mt_four_partition(intro, four)
    assert four.to_two_part() == _mt({0, 1, 2}, 8)


def test_four_partition_rejects_non_clique_k(intro):
    bad = MTFourPartition(frozenset({0, 1, 2}), frozenset(), frozenset({5}), frozenset({3, 4, 6, 7}))
    verdict = verify_mt_four_partition(intro, bad)
    assert verdict.clause == 'K-clique'


def test_four_partition_rejects_s_touching_m(intro):
    bad = MTFourPartition(frozenset({2}), frozenset({0, 1}), frozenset({3}), frozenset({4, 5, 6, 7}))
    assert not verify_mt_four_partition(intro, bad)


def test_two_part_to_four_needs_a_valid_partition(intro):
    with pytest.raises(CertificateError):
        two_part_to_four(intro, _mt({0, 1}, 8))


def test_tc12_and_split_partitions():
    g = path(4)
    assert verify_tc12_partition(g, TC12Partition(frozenset({1, 2}), frozenset({0, 3})))
    assert verify_tc12_partition(g, TC12Partition(frozenset({0, 1, 2}), frozenset({3}))).clause == 'A-clique'
    assert verify_split_partition(g, SplitPartition(frozenset({1, 2}), frozenset({0, 3})))
    assert verify_split_partition(g, SplitPartition(frozenset({2}), frozenset({0, 1, 3}))).clause == 'S-independent'


def test_complement_partition_verifies_on_the_complement(intro):
    p = _mt({0, 1, 2}, 8)
    assert verify_mt_partition(intro.complement(), complement_partition(p))


def _subset_scan(g, a):
    """MT conditions read straight off the adjacency, one subset at a time"""
    b = [v for v in g.vertices() if v not in a]
    a_ok = all(sum(1 for w in a if w != v and not g.adjacent(v, w)) <= 1 for v in a)
    b_ok = all(sum(1 for w in b if g.adjacent(v, w)) <= 1 for v in b)
    return a_ok and b_ok


def _every_partition(orders):
    for g in atlas(orders):
        for s in range(1 << g.order):
            yield g, _mt((v for v in g.vertices() if (s >> v) & 1), g.order)


def _check_partition_conversions(orders):
    for g, p in _every_partition(orders):
        accepted = bool(verify_mt_partition(g, p))
        assert accepted == _subset_scan(g, p.A), (write_graph6(g), sorted(p.A))
        assert bool(verify_mt_partition(g.complement(), complement_partition(p))) == accepted
        if accepted:
            four = two_part_to_four(g, p)
            assert verify_mt_four_partition(g, four)
            assert four.to_two_part() == p


def test_partition_conversions_up_to_six():
    _check_partition_conversions(range(7))


@pytest.mark.slow
def test_partition_conversions_on_seven():
    _check_partition_conversions([7])


def test_as_mt_partition_keeps_sides():
    t = TC12Partition(frozenset({1}), frozenset({0, 2}))
    s = SplitPartition(frozenset({1}), frozenset({0, 2}))
    assert as_mt_partition(t) == as_mt_partition(s) == _mt({1}, 3)


# ============================================================================
# WITNESSES
# ============================================================================

def test_witness_accepted():
    assert verify_no_certificate(cycle(5), NoCertificate('C5', (0, 1, 2, 3, 4)))
    assert verify_no_certificate(cycle(5), NoCertificate('co-C5', (4, 3, 2, 1, 0)))


@pytest.mark.parametrize('cert, clause', [
    (NoCertificate('nope', (0, 1, 2)), 'unknown-obstruction'),
    (NoCertificate('C5', (0, 1, 2, 3)), 'witness-order'),
    (NoCertificate('C5', (0, 1, 2, 3, 3)), 'structural'),
    (NoCertificate('C5', (0, 1, 2, 3, 7)), 'structural'),
    (NoCertificate('C4', (0, 1, 2, 3)), 'witness-isomorphism'),
])
def test_witness_rejections(cert, clause):
    assert verify_no_certificate(cycle(5), cert).clause == clause


def test_witness_against_an_explicit_catalog():
    catalog = {'pentagon': cycle(5)}
    assert verify_no_certificate(cycle(5), NoCertificate('pentagon', (0, 1, 2, 3, 4)), catalog)
    assert not verify_no_certificate(cycle(5), NoCertificate('C5', (0, 1, 2, 3, 4)), catalog)


def test_verify_certificate_dispatches(intro):
    assert verify_certificate(intro, _mt({0, 1, 2}, 8))
    assert verify_certificate(intro, two_part_to_four(intro, _mt({0, 1, 2}, 8)))
    with pytest.raises(CertificateError):
        verify_certificate(intro, object())


@pytest.mark.parametrize('graph_class', [None, *GRAPH_CLASSES])
@pytest.mark.parametrize('cert', [
    NoCertificate('K1', (0,)),
    NoCertificate('K2', (0, 1)),
    NoCertificate('K3', (0, 1, 2)),
])
def test_member_graphs_prove_nothing(cert, graph_class):
    # K3 belongs to every class, so no id may name one of its subgraphs
    verdict = verify_no_certificate(complete(3), cert, graph_class=graph_class)
    assert verdict.clause == 'unknown-obstruction'


@pytest.mark.parametrize('graph_class', ['mt', 'tc12'])
def test_c4_backs_only_promise_violations(graph_class):
    square = cycle(4)
    assert verify_no_certificate(square, NoCertificate('C4', (0, 1, 2, 3), promise=True), graph_class=graph_class)
    verdict = verify_no_certificate(square, NoCertificate('C4', (0, 1, 2, 3)), graph_class=graph_class)
    assert verdict.clause == 'certificate-kind'


def test_c4_is_a_real_split_obstruction():
    square = cycle(4)
    assert verify_no_certificate(square, NoCertificate('C4', (0, 1, 2, 3)), graph_class='split')
    verdict = verify_no_certificate(square, NoCertificate('C4', (0, 1, 2, 3), promise=True), graph_class='split')
    assert verdict.clause == 'certificate-kind'


def test_ids_stay_inside_their_class():
    pentagon = NoCertificate('C5', (0, 1, 2, 3, 4))
    assert verify_no_certificate(cycle(5), pentagon, graph_class='tc12')
    assert verify_no_certificate(cycle(5), pentagon, graph_class='split')
    assert verify_no_certificate(cycle(5), pentagon, graph_class='mt').clause == 'unknown-obstruction'
    two_paths = NoCertificate('2P3', tuple(range(6)))
    g = disjoint_union(path(3), path(3))
    assert verify_no_certificate(g, two_paths, graph_class='tc12')
    assert verify_no_certificate(g, two_paths, graph_class='mt').clause == 'unknown-obstruction'


def test_complement_ids_only_for_complement_closed_classes():
    co_pentagon = NoCertificate('co-C5', (0, 2, 4, 1, 3))
    assert verify_no_certificate(cycle(5), co_pentagon, graph_class='split')
    assert verify_no_certificate(cycle(5), co_pentagon, graph_class='tc12').clause == 'unknown-obstruction'
    forest = NoCertificate('co-ll-ll', tuple(range(9)))
    assert verify_no_certificate(path(9).complement(), forest, graph_class='mt')


def test_unknown_class_is_an_error():
    with pytest.raises(CertificateError):
        verify_no_certificate(cycle(5), NoCertificate('C5', (0, 1, 2, 3, 4)), graph_class='chordal')


def test_no_documents_name_their_class():
    assert to_document(no(NoCertificate('2P3', tuple(range(6))), 'tc12'))['class'] == 'tc12'
    assert to_document(no(NoCertificate('2K2', (0, 1, 2, 3)), 'split'))['class'] == 'split'
    assert to_document(no(NoCertificate('ll-ll', tuple(range(9))), 'complement/tree'))['class'] == 'mt'
    assert 'class' not in to_document(yes(_mt({0}, 2), 'c4free'))
    assert document_class({'verdict': 'no', 'kind': 'obstruction'}) is None
    with pytest.raises(CertificateError):
        document_class({'class': 'chordal'})


def test_promise_kind():
    assert NoCertificate('C4', (0, 1, 2, 3), promise=True).kind == 'promise-violation'
    assert NoCertificate('C5', (0, 1, 2, 3, 4)).kind == 'obstruction'


# ============================================================================
# DOCUMENTS
# ============================================================================

def test_yes_document(intro):
    doc = to_document(yes(_mt({0, 1, 2}, 8), 'c4free'))
    assert doc == {
        'verdict': 'yes', 'kind': 'mt', 'obstruction_id': None,
        'partition': {'A': [0, 1, 2], 'B': [3, 4, 5, 6, 7]}, 'route': 'c4free',
    }
    assert from_document(json.loads(json.dumps(doc))) == _mt({0, 1, 2}, 8)


def test_no_document_with_flags():
    result = no(NoCertificate('3K3', tuple(range(9))), 'nd', DECISION_ONLY)
    doc = to_document(result)
    assert doc['kind'] == 'obstruction'
    assert doc['witness'] == list(range(9))
    assert doc['flags'] == [DECISION_ONLY]
    assert from_document(doc) == result.certificate


def test_none_document():
    result = RecognitionResult(YES, None, frozenset({PARTITION_OMITTED}), 'cograph')
    doc = to_document(result)
    assert doc['kind'] == 'none'
    assert from_document(doc) is None


@pytest.mark.parametrize('doc', [
    [],
    {'verdict': 'yes'},
    {'verdict': 'maybe', 'kind': 'none'},
    {'verdict': 'yes', 'kind': 'mt', 'partition': {'A': [0]}},
    {'verdict': 'yes', 'kind': 'mt', 'partition': {'A': [0], 'B': [True]}},
    {'verdict': 'no', 'kind': 'obstruction', 'obstruction_id': 5, 'witness': [0]},
    {'verdict': 'no', 'kind': 'obstruction', 'obstruction_id': 'C5', 'witness': '01234'},
    {'verdict': 'no', 'kind': 'sideways'},
])
def test_bad_documents(doc):
    with pytest.raises(CertificateError):
        from_document(doc)


def test_schema_enums_match_the_serializer():
    schema = json.loads(SCHEMA.read_text())
    props = schema['properties']
    assert set(props['verdict']['enum']) == {YES, NO, 'undecided'}
    assert set(props['kind']['enum']) == set(_PARTITION_KINDS) | set(_WITNESS_KINDS) | {'none'}
    assert set(props['flags']['items']['enum']) == {PARTITION_OMITTED, DECISION_ONLY, AUDIT_FALLBACK}
    assert tuple(props['class']['enum']) == GRAPH_CLASSES


def test_with_flags_adds():
    r = yes(_mt(set(), 0), 'x').with_flags(AUDIT_FALLBACK)
    assert r.flags == {AUDIT_FALLBACK}
    assert r.is_member
