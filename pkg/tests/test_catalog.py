import pytest

from mayatupi import catalog, config
from mayatupi.canon import is_isomorphic
from mayatupi.catalog import (
    CATALOG_NAMES, ObstructionCatalog, complement_id, get_catalog, identify_mt_obstruction, intro_example,
    parse_figures, resolve, union_name,
)
from mayatupi.errors import CatalogError
from mayatupi.graph import complete, cycle, disjoint_union, find_p4, is_forest, path
from mayatupi.oracle import is_minimal_obstruction, is_mt, is_tc12


@pytest.mark.parametrize('name, size', [
    ('F', 6), ('tc12', 7), ('split', 3), ('fdisc', 28), ('fcog', 20), ('forest', 11), ('components', 12),
])
def test_catalog_sizes(name, size):
    assert len(get_catalog(name)) == size


def test_every_catalog_name_builds():
    for name in CATALOG_NAMES:
        assert len(get_catalog(name)) > 0


def test_fdisc_orders():
    assert get_catalog('fdisc').counts() == {7: 6, 8: 4, 9: 18}


@pytest.mark.parametrize('name', ['fdisc', 'fcog', 'forest'])
def test_mt_families_are_minimal_obstructions(name):
    for entry, g in get_catalog(name).items():
        assert is_minimal_obstruction(g, is_mt), entry


def test_tc12_witnesses_are_non_members():
    cat = get_catalog('tc12')
    assert cat.promise == {'C4'}
    for entry, g in cat.items():
        assert is_tc12(g) == (entry == 'C4'), entry


def test_family_shapes():
    assert all(is_forest(g) for _, g in get_catalog('forest').items())
    assert all(find_p4(g) is None for _, g in get_catalog('fcog').items())


def test_forest_names():
    forest = get_catalog('forest')
    assert forest.identify(path(9)) == 'll-ll'
    assert forest.identify(disjoint_union(path(3), path(3), path(3))) == 'eps'


def test_identify_mt_obstruction():
    assert identify_mt_obstruction(disjoint_union(cycle(4), path(3))) == 'C4+P3'
    assert identify_mt_obstruction(path(9).complement()) == 'co-ll-ll'
    assert identify_mt_obstruction(disjoint_union(complete(3), complete(3), complete(3)).complement()) == 'co-3K3'
    assert identify_mt_obstruction(path(4)) is None


def test_complement_ids():
    assert complement_id('C4') == 'co-C4'
    assert complement_id('co-3K3') == '3K3'
    tricky = 'co-X98+P3'
    assert complement_id(tricky) == 'co-co-X98+P3'
    assert is_isomorphic(resolve(complement_id(tricky)), resolve(tricky).complement())


def test_resolve():
    assert is_isomorphic(resolve('P9'), path(9))
    assert is_isomorphic(resolve('co-C5'), cycle(5))
    assert resolve('no-such-graph') is None


def test_union_name():
    assert union_name([(2, 'P3'), (1, 'K3')]) == '2P3+K3'
    assert union_name([(0, 'P3'), (3, 'K3')]) == '3K3'


def test_intro_example():
    g = intro_example()
    assert (g.order, g.size) == (8, 9)


def test_catalog_rejects_isomorphic_entries():
    cat = ObstructionCatalog('t')
    cat.add('a', cycle(5))
    with pytest.raises(CatalogError):
        cat.add('b', cycle(5).complement())
    with pytest.raises(CatalogError):
        cat.add('a', path(2))


def test_sorted_names_follow_canonical_forms():
    cat = ObstructionCatalog('t')
    cat.add('big', complete(3))
    cat.add('small', path(2))
    assert cat.sorted_names() == ['small', 'big']


def test_parse_figures_errors():
    with pytest.raises(CatalogError):
        parse_figures('P3 3 0-1 1-2\n')
    with pytest.raises(CatalogError):
        parse_figures('[s]\nP3 3 0-1 1-9\n')
    assert parse_figures('# c\n[s]\nP3 3 0-1 1-2  # path\n')['s']['P3'] == path(3)


def test_unknown_catalog():
    with pytest.raises(CatalogError):
        get_catalog('nope')


def test_bad_transcription_fails_the_minimality_gate(monkeypatch):
    real = catalog.build_component_graphs()
    first = next(iter(real))
    # 2P3 is an MT graph, so a component transcribed as P3 cannot pass
    monkeypatch.setattr(catalog, 'build_component_graphs', lambda: {**real, first: path(3)})
    with pytest.raises(CatalogError, match='not a minimal obstruction'):
        catalog.build_fdisc()


def test_catalogs_build_under_a_small_oracle_cap(monkeypatch):
    monkeypatch.setattr(config, 'settings', config.settings.override(oracle_cap=2))
    assert len(catalog.build_forest_obstructions()) == 11
