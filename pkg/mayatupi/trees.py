"""
Certifying MT recognition on trees.

The diameter fixes the shape. Up to diameter 3 the centres form A; at diameter 4
everything turns on the high-degree neighbours of the centre; 5 to 7 leave a few
candidate A-sets along a diametral path; from 8 on the first nine path vertices
induce P9.

In a forest A has at most three vertices, and induces P3 when it has three, so
a candidate that fails is settled by a depth-three hitting-set search over the
induced P3s. When the search fails too, the witness is three disjoint P3s read
off the diametral path and its branches. For general forests the vertices a
failing search looks at induce a non-MT forest of at most 120 vertices;
deleting vertices while that stays true leaves a minimal obstruction, named
from the forest catalog.

Only neighbour tuples are touched here, so trees with 10^5 vertices are fine.
"""

import logging
from itertools import combinations
from typing import Iterable, Optional, Union

from .catalog import get_catalog
from .certificates import (
    MTPartition, NoCertificate, RecognitionResult, no, verify_mt_partition, verify_no_certificate, yes,
)
from .errors import PromiseViolation, RecognitionError
from .graph import DiameterPath, Graph, diameter_path, is_tree

logger = logging.getLogger(__name__)

ROUTE = 'tree'

# |A| in a forest: four vertices would need minimum degree 2 inside A
MAX_A = 3


class P3Search:
    """A-sets of at most three vertices that leave no induced P3 in a forest"""

    def __init__(self, g: Graph):
        self.g = g
        self.internal = [v for v in g.vertices() if g.degree(v) >= 2]
        self.explored: set[int] = set()

    def valid(self, a) -> bool:
        if len(a) < MAX_A:
            return True
        g = self.g
        return sum(1 for u, v in combinations(a, 2) if g.adjacent(u, v)) == 2

    def violation(self, a) -> Optional[tuple[int, int, int]]:
        """An induced P3 (u, v, w) with v the middle vertex, all three outside a"""
        g = self.g
        a = set(a)
        near = set(a)
        # only vertices next to A can lose B-neighbours to it
        for x in sorted(a):
            for v in g.neighbors(x):
                if v in near:
                    continue
                near.add(v)
                free = [w for w in g.neighbors(v) if w not in a]
                if len(free) >= 2:
                    return free[0], v, free[1]
        for v in self.internal:
            if v not in near:
                nbrs = g.neighbors(v)
                return nbrs[0], v, nbrs[1]
        return None

    def accepts(self, a) -> bool:
        return self.valid(a) and self.violation(a) is None

    def search(self, a: tuple = ()) -> Optional[tuple[int, ...]]:
        """First A found by branching on the vertices of an unhit P3; None if there is none"""
        if not self.valid(a):
            return None
        p3 = self.violation(a)
        if p3 is None:
            return a
        self.explored.update(p3)
        if len(a) == MAX_A:
            return None
        for x in p3:
            found = self.search(tuple(sorted(a + (x,))))
            if found is not None:
                return found
        return None


def forest_partition(g: Graph, a: Iterable[int]) -> MTPartition:
    a = frozenset(a)
    return MTPartition(a, frozenset(v for v in g.vertices() if v not in a))


def is_mt_forest(g: Graph) -> bool:
    return P3Search(g).search() is not None


def minimal_forest_witness(g: Graph, explored: Iterable[int]) -> NoCertificate:
    """Shrink a non-MT vertex set of a forest to a minimal obstruction and name it"""
    keep = sorted(explored)
    for v in list(keep):
        trial = [w for w in keep if w != v]
        if not is_mt_forest(g.induced_subgraph(trial)[0]):
            keep = trial
    sub, _ = g.induced_subgraph(keep)
    name = get_catalog('forest').identify(sub) if sub.order <= 12 else None
    if name is None:
        logger.error(f"minimal non-MT forest on {sub.order} vertices is not in the forest catalog")
        raise RecognitionError('tree route: uncatalogued minimal forest obstruction')
    return NoCertificate(name, tuple(keep))


def forest_witness(g: Graph) -> Optional[NoCertificate]:
    """Forest obstruction induced in the forest g, or None when g is MT"""
    search = P3Search(g)
    if search.search() is not None:
        return None
    return minimal_forest_witness(g, search.explored)


# ============================================================================
# DIAMETER CASES
# ============================================================================

def _spider_witness(g: Graph, centre: int, high: list[int]) -> NoCertificate:
    """Three degree->=3 neighbours of the centre, each with two further neighbours: 3P3"""
    witness = []
    for u in high[:3]:
        outer = [w for w in g.neighbors(u) if w != centre][:2]
        witness += [outer[0], u, outer[1]]
    return NoCertificate('eps', tuple(witness))


def tree_shape(t: Graph, dp: DiameterPath) -> Union[list[tuple[int, ...]], NoCertificate]:
    """Candidate A-sets for the diameter of t, or the witness the diameter already forces"""
    d = dp.diameter
    x = dp.path
    if d <= 3:
        # K1, K2, star, double star
        return [dp.centers]
    if d == 4:
        v = dp.centers[0]
        high = [u for u in t.neighbors(v) if t.degree(u) >= 3]
        if len(high) >= 3:
            return _spider_witness(t, v, high)
        return [(v, *high)]
    if d == 5:
        return [(x[1], x[4]), (x[1], x[2], x[3]), (x[2], x[3], x[4])]
    if d == 6:
        return [(x[2], x[5]), (x[1], x[4]), (x[2], x[3], x[4])]
    if d == 7:
        return [(x[2], x[5])]
    return NoCertificate('ll-ll', tuple(x[:9]))


# ============================================================================
# DIAMETER TEMPLATES
# ============================================================================
# A tree with diameter 5 to 7 that has no A-set contains three vertex-disjoint
# P3s whose connecting edges form a matching; which three is read off the
# diametral path and the branches hanging from it.

Triple = tuple[int, int, int]


def _off_path(t: Graph, x: tuple[int, ...], i: int) -> list[int]:
    return [w for w in t.neighbors(x[i]) if w != x[i - 1] and w != x[i + 1]]


def _fork(t: Graph, w: int, parent: int) -> Triple:
    """w with two of its neighbours other than parent"""
    a, b = [c for c in t.neighbors(w) if c != parent][:2]
    return a, w, b


def _branch_p3(t: Graph, root: int, w: int) -> Optional[Triple]:
    """An induced P3 inside the branch that w starts, if the branch is not K1 or K2"""
    children = [c for c in t.neighbors(w) if c != root]
    if len(children) >= 2:
        return children[0], w, children[1]
    for c in children:
        for q in t.neighbors(c):
            if q != w:
                return w, c, q
    return None


def _d5_triples(t: Graph, x: tuple[int, ...]) -> Iterable[tuple[Triple, Triple, Triple]]:
    u, v = x[2], x[3]
    high = {c: [w for w in t.neighbors(c) if w != other and t.degree(w) >= 3] for c, other in ((u, v), (v, u))}
    for c, other in ((u, v), (v, u)):
        if len(high[c]) >= 2:
            # the far side still reaches depth two
            far = next(w for w in t.neighbors(other) if w != c and t.degree(w) >= 2)
            tail = next(q for q in t.neighbors(far) if q != other)
            yield _fork(t, high[c][0], c), _fork(t, high[c][1], c), (other, far, tail)
    if len(high[u]) == 1 and len(high[v]) == 1:
        y, z = high[u][0], high[v][0]
        for w in t.neighbors(u):
            if w != v and w != y:
                yield _fork(t, y, u), _fork(t, z, v), (w, u, v)
        for w in t.neighbors(v):
            if w != u and w != z:
                yield _fork(t, y, u), _fork(t, z, v), (u, v, w)


def _d6_triples(t: Graph, x: tuple[int, ...]) -> Iterable[tuple[Triple, Triple, Triple]]:
    for p in (x, x[::-1]):
        y1, y2, y3, y5 = (_off_path(t, p, i) for i in (1, 2, 3, 5))
        if y1 and y5:
            yield (p[0], p[1], y1[0]), (p[2], p[3], p[4]), (y5[0], p[5], p[6])
        if y1 and y2:
            yield (p[0], p[1], y1[0]), (y2[0], p[2], p[3]), (p[4], p[5], p[6])
        if y1 and y3:
            yield (p[0], p[1], y1[0]), (p[2], p[3], y3[0]), (p[4], p[5], p[6])
    for i in (2, 3, 4):
        for w in _off_path(t, x, i):
            branch = _branch_p3(t, x[i], w)
            if branch is not None:
                yield (x[0], x[1], x[2]), branch, (x[4], x[5], x[6])


def _d7_triples(t: Graph, x: tuple[int, ...]) -> Iterable[tuple[Triple, Triple, Triple]]:
    for p in (x, x[::-1]):
        y1, y3 = _off_path(t, p, 1), _off_path(t, p, 3)
        if y1:
            yield (p[0], p[1], y1[0]), (p[2], p[3], p[4]), (p[5], p[6], p[7])
        if y3:
            yield (p[0], p[1], p[2]), (y3[0], p[3], p[4]), (p[5], p[6], p[7])
        for w in _off_path(t, p, 2):
            branch = _branch_p3(t, p[2], w)
            if branch is not None:
                yield (p[0], p[1], p[2]), branch, (p[4], p[5], p[6])


_TRIPLES = {5: _d5_triples, 6: _d6_triples, 7: _d7_triples}


def diameter_witness(t: Graph, dp: DiameterPath) -> Optional[NoCertificate]:
    """Forest-catalog witness of a non-MT tree with diameter 5 to 7, read off dp"""
    triples = _TRIPLES.get(dp.diameter)
    if triples is None:
        return None
    forest = get_catalog('forest')
    for paths in triples(t, dp.path):
        witness = tuple(v for p in paths for v in p)
        if len(set(witness)) != 9:
            continue
        sub, _ = t.induced_subgraph(witness)
        name = forest.identify(sub)
        if name is not None:
            return NoCertificate(name, witness)
    return None


def _accept(t: Graph, a) -> RecognitionResult:
    p = forest_partition(t, a)
    verdict = verify_mt_partition(t, p)
    if not verdict:
        logger.error(f"tree partition A={sorted(a)} failed verification: {verdict}")
        raise RecognitionError('tree route produced an invalid partition')
    return yes(p, ROUTE)


def recognize_mt_tree(t: Graph) -> RecognitionResult:
    """MT-partition or forest-catalog witness for a tree, in linear time"""
    if not is_tree(t):
        raise PromiseViolation(f"tree route needs a tree, got {t!r}")
    dp = diameter_path(t)
    shape = tree_shape(t, dp)
    if isinstance(shape, NoCertificate):
        cert = shape
    else:
        search = P3Search(t)
        for a in shape:
            if search.accepts(a):
                return _accept(t, a)
        logger.debug(f"diameter {dp.diameter}: no candidate A, searching P3 hitting sets")
        a = search.search()
        if a is not None:
            return _accept(t, a)
        cert = diameter_witness(t, dp)
        if cert is None:
            logger.warning(f"diameter {dp.diameter}: no template matched, minimising the explored forest")
            cert = minimal_forest_witness(t, search.explored)
    verdict = verify_no_certificate(t, cert, get_catalog('forest'))
    if not verdict:
        logger.error(f"tree witness {cert.obstruction_id} failed verification: {verdict}")
        raise RecognitionError('tree route produced an invalid witness')
    return no(cert, ROUTE)
