"""
Isomorph-free generation of small graphs and the minimal obstruction search.

Canonical augmentation: a child H of parent P (P plus one new vertex) is kept
when the new vertex has minimum degree and P has the least canonical form among
the graphs H - v over the minimum-degree vertices v. Every class then has one
parent class, so deduplicating the children of each parent is enough; parents
are independent and fan out over a process pool.

Levels travel between processes as canonical-form bytes and are kept sorted,
so every output is deterministic.
"""

import json
import logging
from functools import partial
from itertools import combinations_with_replacement
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

from tqdm import tqdm

from . import config
from .canon import CanonicalForm, canonical_form, from_canonical_form
from .catalog import ObstructionCatalog, get_catalog, identify_mt_obstruction
from .errors import RecognitionError, SizeLimitError
from .graph import Graph, disjoint_union, find_c4, is_chordal, is_cograph, is_connected, is_forest
from .oracle import MEMBERSHIP, is_minimal_obstruction, is_mt

logger = logging.getLogger(__name__)

FILTERS: dict[str, Callable[[Graph], bool]] = {
    'none': lambda g: True,
    'chordal': is_chordal,
    'forest': is_forest,
    'cograph': is_cograph,
    'c4free': lambda g: find_c4(g) is None,
}


def _check_restrict(restrict: str):
    if restrict not in FILTERS:
        raise ValueError(f"unknown filter {restrict!r}; expected one of {', '.join(FILTERS)}")


def _install_settings(settings: config.Config):
    """Pool initializer: spawned workers would otherwise rebuild settings from the environment"""
    config.settings = settings


def _imap(func, items: list, workers: Optional[int], desc: str) -> Iterator:
    """map over items, in a process pool when workers > 1, with a progress bar on terminals"""
    workers = config.settings.workers if workers is None else workers
    bar = dict(total=len(items), desc=desc, leave=False, disable=None)
    if workers <= 1 or len(items) < 2 * workers:
        yield from tqdm(map(func, items), **bar)
        return
    chunksize = max(1, len(items) // (workers * 16))
    with Pool(processes=workers, initializer=_install_settings, initargs=(config.settings,)) as pool:
        yield from tqdm(pool.imap_unordered(func, items, chunksize=chunksize), **bar)


# ============================================================================
# GENERATION
# ============================================================================

def augment(form: CanonicalForm, restrict: str = 'none') -> list[CanonicalForm]:
    """Canonical forms of the accepted children of one parent"""
    parent = from_canonical_form(form)
    n = parent.order
    keep = FILTERS[restrict]
    seen: set[CanonicalForm] = set()
    out = []
    for s in range(1 << n):
        child = parent.with_vertex(s)
        degree = s.bit_count()
        if degree > min(child.degrees()):
            continue
        if not keep(child):
            continue
        rivals = (v for v in range(n) if child.degree(v) == degree)
        if any(canonical_form(child.without(v)) < form for v in rivals):
            continue
        cf = canonical_form(child)
        if cf not in seen:
            seen.add(cf)
            out.append(cf)
    return out


def enumerate_levels(n_max: int, restrict: str = 'none', workers: Optional[int] = None,
                     start: Optional[tuple[int, list[CanonicalForm]]] = None) -> Iterator[tuple[int, list[CanonicalForm]]]:
    """(order, sorted forms) for every order up to n_max; `start` resumes after a finished level"""
    _check_restrict(restrict)
    cap = config.settings.enum_cap
    if n_max > cap:
        raise SizeLimitError('enumerate_graphs', n_max, cap)
    if start is None:
        order, level = 0, [canonical_form(Graph(0))]
        yield order, level
    else:
        order, level = start
    while order < n_max:
        children: set[CanonicalForm] = set()
        for batch in _imap(partial(augment, restrict=restrict), level, workers, f"n={order + 1}"):
            for cf in batch:
                if cf in children:
                    logger.error(f"canonical augmentation produced {cf.hex()} twice")
                    raise RecognitionError('enumeration generated a class twice')
                children.add(cf)
        order, level = order + 1, sorted(children)
        logger.info(f"order {order}: {len(level)} graphs ({restrict})")
        yield order, level


def enumerate_graphs(n_max: int, restrict: str = 'none', workers: Optional[int] = None) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order 0..n_max passing the filter"""
    for _, level in enumerate_levels(n_max, restrict, workers):
        for cf in level:
            yield from_canonical_form(cf)


# ============================================================================
# MINIMAL OBSTRUCTIONS
# ============================================================================

def _classify(form: CanonicalForm, class_name: str) -> tuple[CanonicalForm, bool, tuple[CanonicalForm, ...]]:
    """(form, member?, forms of the one-vertex deletions when not a member)"""
    g = from_canonical_form(form)
    if MEMBERSHIP[class_name](g):
        return form, True, ()
    return form, False, tuple(canonical_form(g.without(v)) for v in g.vertices())


def _name_for(class_name: str, g: Graph) -> Optional[str]:
    if class_name == 'mt':
        return identify_mt_obstruction(g)
    return get_catalog(class_name).identify(g)


def _load_checkpoint(path: Optional[Path], class_name: str, restrict: str) -> Optional[dict]:
    if path is None or not path.exists():
        return None
    state = json.loads(path.read_text())
    if state.get('class') != class_name or state.get('restrict') != restrict:
        logger.warning(f"checkpoint {path} is for {state.get('class')}/{state.get('restrict')}, ignoring it")
        return None
    logger.info(f"resuming {class_name}/{restrict} after order {state['order']}")
    return state


def _save_checkpoint(path: Path, class_name: str, restrict: str, order: int, level, bad, found):
    state = {
        'class': class_name,
        'restrict': restrict,
        'order': order,
        'level': [cf.hex() for cf in level],
        'bad': sorted(cf.hex() for cf in bad),
        'found': [cf.hex() for cf in found],
    }
    tmp = path.with_suffix('.tmp')
    tmp.write_text(json.dumps(state))
    tmp.replace(path)


def _build_catalog(label: str, class_name: str, found: Iterable[CanonicalForm], name_for) -> ObstructionCatalog:
    cat = ObstructionCatalog(label)
    per_order: dict[int, int] = {}
    for cf in sorted(found):
        g = from_canonical_form(cf)
        name = name_for(g)
        if name is None or name in cat:
            per_order[g.order] = per_order.get(g.order, 0) + 1
            name = f"{class_name}-{g.order}-{per_order[g.order]:04d}"
        cat.add(name, g, 'enumerated')
    return cat


def find_minimal_obstructions(n_max: int, class_name: str = 'mt', restrict: str = 'none',
                              workers: Optional[int] = None, checkpoint: Optional[Path] = None) -> ObstructionCatalog:
    """
    Every minimal obstruction of order <= n_max inside the filter.

    A non-member is minimal when none of its one-vertex deletions is a
    non-member of the previous level, so each graph costs one oracle call.
    """
    if class_name not in MEMBERSHIP:
        raise ValueError(f"unknown class {class_name!r}; expected one of {', '.join(MEMBERSHIP)}")
    _check_restrict(restrict)
    state = _load_checkpoint(checkpoint, class_name, restrict)
    if state is not None:
        start = (state['order'], [bytes.fromhex(h) for h in state['level']])
        bad = {bytes.fromhex(h) for h in state['bad']}
        found = [bytes.fromhex(h) for h in state['found']]
    else:
        start, bad, found = None, set(), []
    for order, level in enumerate_levels(n_max, restrict, workers, start):
        level_bad = set()
        classify = partial(_classify, class_name=class_name)
        for form, member, deletions in _imap(classify, level, workers, f"check n={order}"):
            if member:
                continue
            level_bad.add(form)
            if not any(d in bad for d in deletions):
                found.append(form)
        logger.info(f"order {order}: {len(level_bad)} non-members, {sum(1 for f in found if f[0] == order)} minimal")
        bad = level_bad
        if checkpoint is not None:
            _save_checkpoint(checkpoint, class_name, restrict, order, level, bad, found)
    label = f"{class_name}-{restrict}" if restrict != 'none' else class_name
    return _build_catalog(label, class_name, found, partial(_name_for, class_name))


def disconnected_minimal_obstructions(n_max: int, workers: Optional[int] = None) -> ObstructionCatalog:
    """Disconnected minimal MT-obstructions of order <= n_max, composed from connected MT pieces"""
    # K1 and K2 components can always join B, so every component has order >= 3
    pieces: list[CanonicalForm] = []
    if n_max >= 6:
        for order, level in enumerate_levels(n_max - 3, 'none', workers):
            if order < 3:
                continue
            for cf in level:
                g = from_canonical_form(cf)
                if is_connected(g) and is_mt(g):
                    pieces.append(cf)
    combos = [
        combo
        for r in range(2, n_max // 3 + 1)
        for combo in combinations_with_replacement(pieces, r)
        if sum(cf[0] for cf in combo) <= n_max
    ]
    logger.info(f"{len(pieces)} connected MT pieces, {len(combos)} unions to check")
    found = []
    for combo in tqdm(combos, desc='unions', leave=False, disable=None):
        g = disjoint_union(*(from_canonical_form(cf) for cf in combo))
        if is_minimal_obstruction(g, is_mt):
            found.append(canonical_form(g))
    fdisc = get_catalog('fdisc')
    return _build_catalog('fdisc-enumerated', 'disc', found, fdisc.identify)


def count_table(cat: ObstructionCatalog, n_max: int) -> list[tuple[int, int]]:
    """(order, count) for every order 1..n_max, zeros included"""
    counts = cat.counts()
    return [(order, counts.get(order, 0)) for order in range(1, n_max + 1)]
