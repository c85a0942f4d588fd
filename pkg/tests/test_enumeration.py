import json

import networkx as nx
import pytest

from conftest import atlas
from mayatupi import config, enumeration
from mayatupi.canon import canonical_form
from mayatupi.enumeration import (
    augment, count_table, disconnected_minimal_obstructions, enumerate_graphs, enumerate_levels,
    find_minimal_obstructions,
)
from mayatupi.errors import SizeLimitError
from mayatupi.graph import Graph


def _sizes(n_max, restrict='none'):
    return [len(level) for _, level in enumerate_levels(n_max, restrict, workers=1)]


def test_graph_counts():
    assert _sizes(6) == [1, 1, 2, 4, 11, 34, 156]


def test_forest_counts():
    assert _sizes(7, 'forest') == [1, 1, 2, 3, 6, 10, 20, 37]


def test_chordal_counts_match_networkx():
    expected = [sum(1 for g in atlas([n]) if n == 0 or nx.is_chordal(g.to_networkx())) for n in range(7)]
    assert _sizes(6, 'chordal') == expected


def test_levels_match_atlas_forms():
    level = dict(enumerate_levels(5, workers=1))[5]
    assert set(level) == {canonical_form(g) for g in atlas([5])}
    assert level == sorted(level)


def test_augment_children_are_distinct():
    # K2 + K1, P3 and K3; 3K1 comes from 2K1
    children = augment(canonical_form(Graph(2, [(0, 1)])))
    assert len(children) == len(set(children)) == 3


def test_enumerate_graphs_yields_representatives():
    graphs = list(enumerate_graphs(3, workers=1))
    assert [g.order for g in graphs] == [0, 1, 2, 2, 3, 3, 3, 3]


def test_caps_and_bad_arguments():
    with pytest.raises(SizeLimitError):
        next(enumerate_levels(11))
    with pytest.raises(ValueError):
        next(enumerate_levels(3, 'planar'))
    with pytest.raises(ValueError):
        find_minimal_obstructions(3, 'perfect')


def test_split_obstructions():
    cat = find_minimal_obstructions(6, 'split', workers=1)
    assert set(cat) == {'2K2', 'C4', 'C5'}


def test_no_mt_obstructions_up_to_six():
    assert len(find_minimal_obstructions(6, 'mt', workers=1)) == 0


def test_tc12_obstructions_up_to_six():
    cat = find_minimal_obstructions(6, 'tc12', workers=1)
    assert len(cat) == 17
    assert {'2P3', 'P3+K3', '2K3', 'C5', 'C6'} <= set(cat)
    assert 'C4' not in cat


@pytest.mark.slow
def test_tc12_obstructions_up_to_seven():
    cat = find_minimal_obstructions(7, 'tc12', workers=1)
    assert len(cat) == 18
    assert 'C7' in cat


@pytest.mark.slow
def test_chordal_tc12_obstructions():
    cat = find_minimal_obstructions(7, 'tc12', 'chordal', workers=1)
    assert set(cat) == {'2P3', 'P3+K3', '2K3'}


def test_checkpoint_resume(tmp_path):
    checkpoint = tmp_path / 'split.checkpoint.json'
    first = find_minimal_obstructions(5, 'split', workers=1, checkpoint=checkpoint)
    state = json.loads(checkpoint.read_text())
    assert (state['class'], state['restrict'], state['order']) == ('split', 'none', 5)
    assert len(state['found']) == len(first) == 3
    resumed = find_minimal_obstructions(6, 'split', workers=1, checkpoint=checkpoint)
    assert set(resumed) == {'2K2', 'C4', 'C5'}
    assert json.loads(checkpoint.read_text())['order'] == 6


def test_checkpoint_for_another_class_is_ignored(tmp_path):
    checkpoint = tmp_path / 'state.json'
    find_minimal_obstructions(4, 'split', workers=1, checkpoint=checkpoint)
    cat = find_minimal_obstructions(4, 'tc12', workers=1, checkpoint=checkpoint)
    assert set(cat) == set(find_minimal_obstructions(4, 'tc12', workers=1))


def test_disconnected_composition_to_seven():
    cat = disconnected_minimal_obstructions(7, workers=1)
    assert set(cat) == {'C4+P3', 'C4+K3', 'diamond+P3', 'diamond+K3', 'K4+P3', 'K4+K3'}


@pytest.mark.slow
def test_disconnected_composition_to_nine():
    cat = disconnected_minimal_obstructions(9, workers=1)
    assert len(cat) == 28


def test_count_table():
    cat = find_minimal_obstructions(5, 'split', workers=1)
    assert count_table(cat, 5) == [(1, 0), (2, 0), (3, 0), (4, 2), (5, 1)]


def test_install_settings_replaces_the_module_settings(monkeypatch):
    monkeypatch.setattr(config, 'settings', config.settings)
    changed = config.settings.override(oracle_cap=3, profile_budget=9)
    enumeration._install_settings(changed)
    assert config.settings is changed


def test_pool_workers_get_the_parent_settings(monkeypatch):
    changed = config.settings.override(oracle_cap=5, profile_budget=7)
    monkeypatch.setattr(config, 'settings', changed)
    seen = {}

    class RecordingPool:
        def __init__(self, processes, initializer, initargs):
            seen['processes'] = processes
            seen['initializer'] = initializer
            seen['settings'] = initargs[0]

        def __enter__(self):
            return self

        def __exit__(self, *exc):
            return False

        def imap_unordered(self, func, items, chunksize):
            return map(func, items)

    monkeypatch.setattr(enumeration, 'Pool', RecordingPool)
    assert sorted(enumeration._imap(abs, [-3, -2, -1, 0, 1, 2], 2, 'test')) == [0, 1, 1, 2, 2, 3]
    assert seen['processes'] == 2
    assert seen['initializer'] is enumeration._install_settings
    assert seen['settings'] is changed
