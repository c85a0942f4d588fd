import random

import networkx as nx
import pytest

from conftest import atlas
from mayatupi.canon import canonical_form, canonical_graph, canonical_labeling, from_canonical_form, is_isomorphic
from mayatupi.errors import SizeLimitError
from mayatupi.graph import Graph, cycle, empty, path


def _shuffled(g: Graph, seed: int) -> Graph:
    order = list(g.vertices())
    random.Random(seed).shuffle(order)
    return g.relabel(order)


@pytest.mark.parametrize('n, count', [(4, 11), (5, 34), (6, 156)])
def test_forms_separate_atlas_classes(n, count):
    forms = {canonical_form(g) for g in atlas([n])}
    assert len(forms) == count


def test_form_is_label_invariant():
    for seed, g in enumerate(atlas([6])):
        assert canonical_form(_shuffled(g, seed)) == canonical_form(g)


def test_isomorphism_agrees_with_networkx():
    graphs = atlas([5])
    rng = random.Random(7)
    for _ in range(200):
        g, h = rng.choice(graphs), rng.choice(graphs)
        h = _shuffled(h, rng.randrange(1000))
        assert is_isomorphic(g, h) == nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def _random_graph(rng, n_max=9):
    n = rng.randint(1, n_max)
    p = rng.random()
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_random_relabel_pairs():
    rng = random.Random(23)
    for _ in range(500):
        g = _random_graph(rng)
        assert canonical_form(_shuffled(g, rng.randrange(10 ** 6))) == canonical_form(g)
        h = _shuffled(_random_graph(rng), rng.randrange(10 ** 6))
        assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def test_canonical_labeling_order_reproduces_form():
    g = Graph.from_networkx(nx.petersen_graph()).without(0)
    form, order = canonical_labeling(g)
    assert sorted(order) == list(g.vertices())
    assert canonical_form(canonical_graph(g)) == form


def test_form_decodes_to_its_representative():
    for g in atlas([5]):
        form = canonical_form(g)
        rep = from_canonical_form(form)
        assert is_isomorphic(rep, g)
        assert canonical_form(rep) == form


def test_empty_and_trivial_forms():
    assert canonical_form(Graph(0)) == bytes([0])
    assert from_canonical_form(canonical_form(Graph(1))).order == 1
    assert canonical_form(empty(3)) != canonical_form(path(3))


def test_cap_is_enforced():
    with pytest.raises(SizeLimitError):
        canonical_form(cycle(9), cap=8)
