"""
Obstruction catalogs.

Named, canonically deduplicated graph families: the split and (1,2)-tc witness
sets, the disconnected MT family, the cograph family, the forest family and the
component graphs they are built from. Hand transcriptions are edge-list
sections of data/figures.txt. Builders gate what they load: entry counts,
the cograph family being P4-free, the forest family matching its generation
from 3P3, and every fdisc and forest entry being a minimal obstruction under
the brute-force oracle. Catalogs are built once per process.
"""

import logging
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterator, Optional

from .canon import CanonicalForm, canonical_form
from .errors import CatalogError
from .graph import Graph, component_masks, complete, cycle, disjoint_union, empty, find_p4, path
from .config import ORACLE_HARD_CAP
from .oracle import is_minimal_obstruction, is_mt

logger = logging.getLogger(__name__)

FIGURES_PATH = Path(__file__).parent / 'data' / 'figures.txt'


# ============================================================================
# CATALOG TYPE
# ============================================================================

class ObstructionCatalog:
    """name -> Graph, pairwise non-isomorphic"""

    def __init__(self, name: str):
        self.name = name
        self._graphs: dict[str, Graph] = {}
        self._forms: dict[CanonicalForm, str] = {}
        self.provenance: dict[str, str] = {}
        self.promise: set[str] = set()

    def add(self, name: str, g: Graph, provenance: str = '', promise: bool = False):
        form = canonical_form(g)
        if form in self._forms:
            raise CatalogError(f"{self.name}: {name} is isomorphic to {self._forms[form]}")
        if name in self._graphs:
            raise CatalogError(f"{self.name}: duplicate name {name}")
        self._graphs[name] = g
        self._forms[form] = name
        self.provenance[name] = provenance
        if promise:
            self.promise.add(name)

    def __len__(self):
        return len(self._graphs)

    def __iter__(self) -> Iterator[str]:
        return iter(self._graphs)

    def __contains__(self, name):
        return name in self._graphs

    def __getitem__(self, name) -> Graph:
        return self._graphs[name]

    def get(self, name, default=None):
        return self._graphs.get(name, default)

    def items(self):
        return self._graphs.items()

    def forms(self) -> set[CanonicalForm]:
        return set(self._forms)

    def identify(self, g: Graph) -> Optional[str]:
        """Name of the entry isomorphic to g, if any"""
        return self._forms.get(canonical_form(g))

    def counts(self) -> dict[int, int]:
        """order -> number of entries"""
        out: dict[int, int] = {}
        for g in self._graphs.values():
            out[g.order] = out.get(g.order, 0) + 1
        return dict(sorted(out.items()))

    def sorted_names(self) -> list[str]:
        """Names ordered by canonical form (the export order)"""
        return [self._forms[f] for f in sorted(self._forms)]

    def __repr__(self):
        return f"ObstructionCatalog({self.name!r}, {len(self)} entries)"


# ============================================================================
# TRANSCRIPTIONS
# ============================================================================

def parse_figures(text: str) -> dict[str, dict[str, Graph]]:
    """Parse the 'name order u-v ...' sections of the transcription file"""
    sections: dict[str, dict[str, Graph]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.startswith('[') and line.endswith(']'):
            current = sections.setdefault(line[1:-1], {})
            continue
        if current is None:
            raise CatalogError(f"figures line {lineno}: graph outside a section")
        name, order, *pairs = line.split()
        try:
            edges = [tuple(int(x) for x in p.split('-')) for p in pairs]
            current[name] = Graph(int(order), edges)
        except ValueError as e:
            raise CatalogError(f"figures line {lineno}: {e}") from None
    return sections


@lru_cache(maxsize=None)
def figures() -> dict[str, dict[str, Graph]]:
    return parse_figures(FIGURES_PATH.read_text())


def intro_example() -> Graph:
    return figures()['examples']['intro']


# ============================================================================
# SMALL NAMED GRAPHS
# ============================================================================

P3 = path(3)
K3 = complete(3)
TWO_K2 = Graph(4, [(0, 1), (2, 3)])


def union_name(parts) -> str:
    """'2P3+K3' from [(2, 'P3'), (1, 'K3')]"""
    return '+'.join(f"{k}{p}" if k > 1 else p for k, p in parts if k)


def _named_union(parts: list[tuple[int, str]]) -> tuple[str, Graph]:
    pieces = {'P3': P3, 'K3': K3}
    graph = disjoint_union(*(pieces[p] for k, p in parts for _ in range(k)))
    return union_name(parts), graph


def build_component_graphs() -> dict[str, Graph]:
    comps = figures()['components']
    if len(comps) != 12:
        raise CatalogError(f"expected 12 component graphs, transcribed {len(comps)}")
    seen: dict[CanonicalForm, str] = {}
    for name, g in comps.items():
        form = canonical_form(g)
        if form in seen:
            raise CatalogError(f"component graphs {name} and {seen[form]} are isomorphic")
        seen[form] = name
    return dict(comps)


def _is_mt_at_hard_cap(g: Graph) -> bool:
    # catalogs are built once and cached, whatever cap the caller runs under
    return is_mt(g, ORACLE_HARD_CAP)


def _gate_minimal(cat: ObstructionCatalog, membership):
    """Every entry must be a minimal non-member; catches transcription slips on load"""
    for name, g in cat.items():
        if not is_minimal_obstruction(g, membership):
            raise CatalogError(f"{cat.name} entry {name} is not a minimal obstruction")


def build_f() -> ObstructionCatalog:
    """2P3, P3+K3, 2K3, C4, C5, C6; C4 is tagged as a promise entry"""
    cat = ObstructionCatalog('F')
    for parts in ([(2, 'P3')], [(1, 'P3'), (1, 'K3')], [(2, 'K3')]):
        name, g = _named_union(parts)
        cat.add(name, g, 'chordal (1,2)-tc obstruction')
    cat.add('C4', cycle(4), 'C4 is (1,2)-tc; returned only as a promise violation', promise=True)
    cat.add('C5', cycle(5), 'induced cycle')
    cat.add('C6', cycle(6), 'induced cycle')
    return cat


def build_tc12_witnesses() -> ObstructionCatalog:
    """F plus C7, the 7-vertex induced cycle the (1,2)-tc recognizer may return"""
    cat = build_f()
    cat.name = 'tc12'
    cat.add('C7', cycle(7), 'induced cycle; minimal (1,2)-tc obstruction on 7 vertices')
    return cat


def build_split_obstructions() -> ObstructionCatalog:
    cat = ObstructionCatalog('split')
    cat.add('2K2', TWO_K2, 'split obstruction')
    cat.add('C4', cycle(4), 'split obstruction')
    cat.add('C5', cycle(5), 'split obstruction')
    return cat


THREE_COMPONENT = ([(3, 'P3')], [(2, 'P3'), (1, 'K3')], [(1, 'P3'), (2, 'K3')], [(3, 'K3')])


def build_fdisc() -> ObstructionCatalog:
    """The 28 disconnected minimal MT-obstructions"""
    cat = ObstructionCatalog('fdisc')
    for parts in THREE_COMPONENT:
        name, g = _named_union(parts)
        cat.add(name, g, 'three big components')
    for jname, j in build_component_graphs().items():
        cat.add(f"{jname}+P3", j.disjoint_union(P3), f"component graph {jname} plus P3")
        cat.add(f"{jname}+K3", j.disjoint_union(K3), f"component graph {jname} plus K3")
    if len(cat) != 28:
        raise CatalogError(f"fdisc has {len(cat)} entries, expected 28")
    for name, g in cat.items():
        big = [c for c in component_masks(g) if c.bit_count() >= 3]
        if len(big) < 2:
            raise CatalogError(f"fdisc entry {name} has fewer than two big components")
    _gate_minimal(cat, _is_mt_at_hard_cap)
    return cat


def build_fcog() -> ObstructionCatalog:
    """Cograph MT-obstructions: ten base graphs and their complements"""
    comps = build_component_graphs()
    base = ObstructionCatalog('fcog-base')
    for parts in THREE_COMPONENT:
        name, g = _named_union(parts)
        base.add(name, g)
    for jname in ('C4', 'diamond', 'K4'):
        for pname, piece in (('P3', P3), ('K3', K3)):
            base.add(f"{jname}+{pname}", comps[jname].disjoint_union(piece))
    cat = ObstructionCatalog('fcog')
    for name, g in base.items():
        cat.add(name, g, 'cograph obstruction')
    for name, g in base.items():
        cat.add(f"co-{name}", g.complement(), f"complement of {name}")
    for name, g in cat.items():
        if find_p4(g) is not None:
            raise CatalogError(f"fcog entry {name} contains an induced P4")
    return cat


# ============================================================================
# FOREST OBSTRUCTIONS
# ============================================================================

_PATHS = ((0, 1, 2), (3, 4, 5), (6, 7, 8))
_BASE_EDGES = [(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8)]


def _forest_candidates() -> Iterator[Graph]:
    """3P3 plus one or two edges between distinct paths, no vertex used twice"""
    yield Graph(9, _BASE_EDGES)
    cross = [(u, v) for a, b in combinations(range(3), 2) for u in _PATHS[a] for v in _PATHS[b]]
    component = {v: i for i, p in enumerate(_PATHS) for v in p}
    for e in cross:
        yield Graph(9, _BASE_EDGES + [e])
    for e, f in combinations(cross, 2):
        if set(e) & set(f):
            continue
        if {component[e[0]], component[e[1]]} == {component[f[0]], component[f[1]]}:
            continue
        yield Graph(9, _BASE_EDGES + [e, f])


def build_forest_obstructions() -> ObstructionCatalog:
    """Generated from 3P3 and checked against the golden transcription"""
    golden = figures()['forest']
    golden_forms = {canonical_form(g): name for name, g in golden.items()}
    generated = {canonical_form(g) for g in _forest_candidates()}
    if generated != set(golden_forms):
        missing = sorted(golden_forms[f] for f in set(golden_forms) - generated)
        raise CatalogError(
            f"forest generation disagrees with transcription: "
            f"{len(generated)} generated, {len(golden_forms)} transcribed, missing {missing}")
    cat = ObstructionCatalog('forest')
    for name, g in golden.items():
        cat.add(name, g, '3P3 plus inter-component edges')
    _gate_minimal(cat, _is_mt_at_hard_cap)
    return cat


# ============================================================================
# REGISTRY
# ============================================================================

CATALOG_BUILDERS = {
    'F': build_f,
    'tc12': build_tc12_witnesses,
    'split': build_split_obstructions,
    'fdisc': build_fdisc,
    'fcog': build_fcog,
    'forest': build_forest_obstructions,
}


@lru_cache(maxsize=None)
def get_catalog(name: str) -> ObstructionCatalog:
    if name == 'components':
        cat = ObstructionCatalog('components')
        for jname, g in build_component_graphs().items():
            cat.add(jname, g, 'component graph')
        return cat
    try:
        builder = CATALOG_BUILDERS[name]
    except KeyError:
        raise CatalogError(f"unknown catalog {name!r}") from None
    cat = builder()
    logger.debug(f"built catalog {name} with {len(cat)} entries")
    return cat


CATALOG_NAMES = ('F', 'tc12', 'split', 'fdisc', 'fcog', 'forest', 'components')

_EXTRA = {
    'P3': P3, 'K3': K3, 'P4': path(4), 'P9': path(9), 'K1': empty(1), 'K2': complete(2),
}


@lru_cache(maxsize=None)
def _registry() -> dict[str, Graph]:
    merged: dict[str, Graph] = dict(_EXTRA)
    # later catalogs never rename a graph an earlier one already named
    for name in ('split', 'tc12', 'fdisc', 'fcog', 'forest'):
        for entry, g in get_catalog(name).items():
            merged.setdefault(entry, g)
    return merged


def resolve(obstruction_id: str) -> Optional[Graph]:
    """Graph for an obstruction id; 'co-X' resolves to the complement of X"""
    g = _registry().get(obstruction_id)
    if g is not None:
        return g
    if obstruction_id.startswith('co-'):
        base = resolve(obstruction_id[3:])
        return None if base is None else base.complement()
    return None


def complement_id(obstruction_id: str) -> str:
    """Id naming the complement; strips a leading co- only when what remains is itself known"""
    if obstruction_id.startswith('co-') and resolve(obstruction_id[3:]) is not None:
        return obstruction_id[3:]
    return f"co-{obstruction_id}"


# catalogs whose entries are non-members of the class
CLASS_CATALOGS = {
    'mt': ('fdisc', 'fcog', 'forest'),
    'tc12': ('tc12',),
    'split': ('split',),
}
# witnesses a class's routes raise when their input promise fails; never non-membership proofs
_CLASS_PROMISES = {'mt': {'C4': cycle(4), 'P4': path(4)}}
_SELF_COMPLEMENTARY = ('mt', 'split')


def class_obstruction(graph_class: str, obstruction_id: str) -> Optional[tuple[Graph, bool]]:
    """(graph, is_promise) for an id catalogued against graph_class, else None

    Classes closed under complement also answer for 'co-X' when X is a real
    obstruction of the class.
    """
    try:
        names = CLASS_CATALOGS[graph_class]
    except KeyError:
        raise CatalogError(f"unknown graph class {graph_class!r}") from None
    for name in names:
        cat = get_catalog(name)
        if obstruction_id in cat:
            return cat[obstruction_id], obstruction_id in cat.promise
    promised = _CLASS_PROMISES.get(graph_class, {}).get(obstruction_id)
    if promised is not None:
        return promised, True
    if graph_class in _SELF_COMPLEMENTARY and obstruction_id.startswith('co-'):
        base = class_obstruction(graph_class, obstruction_id[3:])
        if base is not None and not base[1]:
            return base[0].complement(), False
    return None


def identify_mt_obstruction(g: Graph) -> Optional[str]:
    """Catalog name of g among the MT obstruction families, 'co-' prefixed when only the complement is catalogued"""
    if g.order > 12:
        return None
    families = [get_catalog(name) for name in ('fdisc', 'fcog', 'forest')]
    for cat in families:
        name = cat.identify(g)
        if name is not None:
            return name
    co = g.complement()
    for cat in families:
        name = cat.identify(co)
        if name is not None:
            return complement_id(name)
    return None
