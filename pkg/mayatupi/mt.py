"""
MT recognition routes and the auto dispatcher.

Each route assumes something about its input (forest, disconnected, C4-free,
cograph) and raises PromiseViolation when that fails; `recognize` picks the
first route that applies, tries the complement next, and falls back to twin
reduction plus the oracle. Every certificate is verified before it is returned.
"""

import logging
from typing import Callable, Optional

from . import config
from .catalog import complement_id, get_catalog, identify_mt_obstruction, union_name
from .certificates import (
    DECISION_ONLY, PARTITION_OMITTED, UNDECIDED, YES, MTPartition, NoCertificate, RecognitionResult,
    as_mt_partition, no, result_class, undecided, verify_certificate, yes,
)
from .errors import BudgetExceeded, PromiseViolation, RecognitionError
from .graph import Graph, component_lists, find_c4, find_p4, is_forest, is_tree, mask_of
from .oracle import is_mt, max_degree_le1, min_degree_ge_size_minus2, mt_bruteforce
from .search import find_induced
from .split import recognize_split
from .tc12 import recognize_tc12
from .trees import forest_witness, recognize_mt_tree
from .twins import lift_partition, profile_search, twin_reduce, type_partition

logger = logging.getLogger(__name__)

ConnectedSolver = Callable[[Graph], RecognitionResult]

MODES = ('auto', 'oracle', 'tree', 'forest', 'c4free', 'cograph', 'nd', 'split', 'tc12')


def _partition(g: Graph, a) -> MTPartition:
    a = frozenset(a)
    return MTPartition(a, frozenset(v for v in g.vertices() if v not in a))


def _remap(result: RecognitionResult, old: list[int], g: Graph) -> RecognitionResult:
    """Carry a result on an induced subgraph back to g; vertices outside it join B"""
    c = result.certificate
    if isinstance(c, NoCertificate):
        c = NoCertificate(c.obstruction_id, tuple(old[v] for v in c.witness), c.promise)
    elif c is not None:
        c = _partition(g, (old[v] for v in as_mt_partition(c).A))
    return RecognitionResult(result.verdict, c, result.flags, result.route)


def _minimal_witness(g: Graph, still_bad: Callable[[Graph], bool]) -> Optional[NoCertificate]:
    """Delete vertices while still_bad holds, then name what is left"""
    keep = list(g.vertices())
    for v in list(keep):
        trial = [w for w in keep if w != v]
        if still_bad(g.induced_subgraph(trial)[0]):
            keep = trial
    name = identify_mt_obstruction(g.induced_subgraph(keep)[0])
    if name is None:
        logger.debug(f"minimal obstruction on {len(keep)} vertices is not catalogued")
        return None
    return NoCertificate(name, tuple(keep))


def _decision_only_no(g: Graph, route: str, still_bad: Callable[[Graph], bool]) -> RecognitionResult:
    if g.order > config.settings.oracle_cap:
        return no(None, route, DECISION_ONLY)
    cert = _minimal_witness(g, still_bad)
    if cert is None:
        return no(None, route, DECISION_ONLY)
    return no(cert, route, DECISION_ONLY)


# ============================================================================
# NICE COMPONENTS AND DISCONNECTED GRAPHS
# ============================================================================

def _nice_center(g: Graph, comp: list[int]) -> Optional[int]:
    """Least v of the component with every other vertex of degree <= 1 in comp - v"""
    start = next((u for u in comp if g.degree(u) >= 2), None)
    if start is None:
        return comp[0] if comp else None
    candidates = [start] if g.degree(start) >= 3 else sorted((start, *g.neighbors(start)))
    for v in candidates:
        around = set(g.neighbors(v))
        if all(g.degree(u) - (u in around) <= 1 for u in comp if u != v):
            return v
    return None


def is_nice(g: Graph) -> Optional[int]:
    """Centre of a nice connected graph (subdivided star with optional back-edges), else None"""
    comps = component_lists(g)
    if len(comps) > 1:
        raise PromiseViolation('is_nice needs a connected graph')
    return _nice_center(g, comps[0]) if comps else None


def _piece(g: Graph, comp: list[int]) -> tuple[str, tuple[int, int, int]]:
    """An induced P3 or K3 inside a connected component of at least three vertices"""
    v = next(u for u in comp if g.degree(u) >= 2)
    x, y = g.neighbors(v)[:2]
    return ('K3' if g.adjacent(x, y) else 'P3'), (x, v, y)


def _three_pieces(pieces) -> NoCertificate:
    kinds = [kind for kind, _ in pieces]
    name = union_name([(kinds.count('P3'), 'P3'), (kinds.count('K3'), 'K3')])
    return NoCertificate(name, tuple(v for _, vs in pieces for v in vs))


def _two_component_witness(g: Graph, bad: list[int], other: list[int]) -> Optional[NoCertificate]:
    """F_disc member inside a non-nice big component plus a piece of the other one"""
    kind, piece = _piece(g, other)
    sub, old = g.induced_subgraph(bad + other)
    if is_forest(sub):
        cert = forest_witness(sub)
        if cert is not None:
            return NoCertificate(cert.obstruction_id, tuple(old[v] for v in cert.witness))
    within = mask_of(bad)
    for jname, j in get_catalog('components').items():
        phi = find_induced(j, g, within)
        if phi is not None:
            return NoCertificate(f"{jname}+{kind}", tuple(phi) + piece)
    for name in ('2P3', 'P3+K3', '2K3'):
        pattern = get_catalog('tc12')[name]
        phi = find_induced(pattern, g, within)
        if phi is not None:
            return _three_pieces(_split_pieces(g, phi) + [(kind, piece)])
    return None


def _split_pieces(g: Graph, phi: list[int]) -> list[tuple[str, tuple[int, ...]]]:
    """Cut an embedded two-piece pattern into its P3/K3 pieces"""
    comps = component_lists(g.induced_subgraph(phi)[0])
    ordered = sorted(phi)
    out = []
    for comp in comps:
        vs = tuple(ordered[i] for i in comp)
        edges = sum(1 for i, u in enumerate(vs) for w in vs[i + 1:] if g.adjacent(u, w))
        out.append(('K3' if edges == 3 else 'P3', vs))
    return out


def recognize_mt_disconnected(g: Graph, connected_solver: Optional[ConnectedSolver] = None) -> RecognitionResult:
    """At most two components with three or more vertices, and two only when both are nice"""
    route = 'disconnected'
    comps = component_lists(g)
    if len(comps) < 2:
        raise PromiseViolation('disconnected route needs a disconnected graph')
    big = [c for c in comps if len(c) >= 3]
    logger.debug(f"{len(comps)} components, {len(big)} with three or more vertices")
    if len(big) >= 3:
        return no(_three_pieces([_piece(g, c) for c in big[:3]]), route)
    if len(big) == 2:
        centers = [_nice_center(g, c) for c in big]
        if None not in centers:
            return yes(_partition(g, centers), route)
        bad, other = (big[0], big[1]) if centers[0] is None else (big[1], big[0])
        cert = _two_component_witness(g, bad, other)
        if cert is None:
            return no(None, route, DECISION_ONLY)
        return no(cert, route)
    if len(big) == 1:
        solver = connected_solver or recognize
        sub, old = g.induced_subgraph(big[0])
        return _remap(solver(sub), old, g)
    return yes(_partition(g, ()), route)


def recognize_mt_forest(g: Graph) -> RecognitionResult:
    if not is_forest(g):
        raise PromiseViolation('forest route needs an acyclic graph')
    if g.order == 0:
        return yes(_partition(g, ()), 'forest')
    if is_tree(g):
        return recognize_mt_tree(g)
    return recognize_mt_disconnected(g, recognize_mt_tree)


# ============================================================================
# C4-FREE GRAPHS
# ============================================================================

def _small_a(g: Graph) -> Optional[int]:
    """A-mask with at most two vertices leaving maximum degree <= 1 in B"""
    full = g.full_mask
    if max_degree_le1(g, full):
        return 0
    for u in g.vertices():
        if max_degree_le1(g, full & ~(1 << u)):
            return 1 << u
    for u in g.vertices():
        for v in range(u + 1, g.order):
            a = (1 << u) | (1 << v)
            if max_degree_le1(g, full & ~a):
                return a
    return None


def _antimatched_pair_a(g: Graph) -> Optional[int]:
    """A = {u, v} plus their common neighbours for a non-adjacent pair u, v"""
    full = g.full_mask
    adj = g.masks
    for u in g.vertices():
        for v in range(u + 1, g.order):
            if (adj[u] >> v) & 1:
                continue
            a = (1 << u) | (1 << v) | (adj[u] & adj[v])
            if min_degree_ge_size_minus2(g, a) and max_degree_le1(g, full & ~a):
                return a
    return None


def _c4free_partition(g: Graph) -> Optional[MTPartition]:
    for phase in (_small_a, _antimatched_pair_a):
        a = phase(g)
        if a is not None:
            logger.debug(f"c4free: {phase.__name__} found |A|={a.bit_count()}")
            return _partition(g, (v for v in g.vertices() if (a >> v) & 1))
    answer = recognize_tc12(g)
    if answer.verdict == YES:
        return as_mt_partition(answer.certificate)
    if answer.verdict == UNDECIDED:
        logger.error('tc12 reported a C4 on a C4-free input')
        raise RecognitionError('c4free route: tc12 promise violated on a C4-free graph')
    return None


def recognize_mt_c4free(g: Graph) -> RecognitionResult:
    route = 'c4free'
    c4 = find_c4(g)
    if c4 is not None:
        raise PromiseViolation('c4free route needs a C4-free graph', NoCertificate('C4', tuple(c4), promise=True))
    p = _c4free_partition(g)
    if p is not None:
        return yes(p, route)
    return _decision_only_no(g, route, lambda h: _c4free_partition(h) is None)


# ============================================================================
# COGRAPHS AND BOUNDED NEIGHBOURHOOD DIVERSITY
# ============================================================================

def _nd_partition(g: Graph, kernel_hint: Optional[tuple] = None) -> Optional[MTPartition]:
    """Partition from the twin kernel, lifted, or by profile search; BudgetExceeded propagates"""
    types = type_partition(g)
    kernel, kept = kernel_hint or twin_reduce(g, types)
    if kernel.order <= config.settings.oracle_cap:
        kp = mt_bruteforce(kernel)
        if kp is None:
            return None
        lifted = lift_partition(g, types, kept, kp.A)
        if verify_certificate(g, lifted):
            return lifted
        logger.debug('lifted kernel partition failed; running profile search')
    return profile_search(g, types)


def recognize_mt_cograph(g: Graph) -> RecognitionResult:
    route = 'cograph'
    p4 = find_p4(g)
    if p4 is not None:
        raise PromiseViolation('cograph route needs a P4-free graph', NoCertificate('P4', tuple(p4), promise=True))
    cat = get_catalog('fcog')
    for name in cat.sorted_names():
        phi = find_induced(cat[name], g)
        if phi is not None:
            return no(NoCertificate(name, tuple(phi)), route)
    try:
        p = _nd_partition(g)
    except BudgetExceeded as e:
        logger.info(f"cograph is MT; partition omitted ({e})")
        return RecognitionResult(YES, None, frozenset({PARTITION_OMITTED}), route)
    if p is None:
        logger.error('F_cog-free cograph failed the partition search')
        raise RecognitionError('cograph route: no partition for an F_cog-free cograph')
    return yes(p, route)


def recognize_mt_bounded_nd(g: Graph) -> RecognitionResult:
    route = 'nd'
    types = type_partition(g)
    kernel, kept = twin_reduce(g, types)
    logger.debug(f"nd={len(types)}, kernel order {kernel.order}")
    try:
        p = _nd_partition(g, (kernel, kept))
    except BudgetExceeded as e:
        logger.info(f"nd route undecided: {e}")
        return undecided(route, PARTITION_OMITTED)
    if p is not None:
        return yes(p, route)
    cap = config.settings.oracle_cap
    # the kernel can be MT when g is not (K5,5 over K3,3); only a non-MT kernel holds a witness
    if g.order > cap and kernel.order <= cap and not is_mt(kernel):
        return _remap(_decision_only_no(kernel, route, lambda h: not is_mt(h)), kept, g)
    return _decision_only_no(g, route, lambda h: not is_mt(h))


def recognize_mt_oracle(g: Graph) -> RecognitionResult:
    route = 'oracle'
    p = mt_bruteforce(g)
    if p is not None:
        return yes(p, route)
    return _decision_only_no(g, route, lambda h: not is_mt(h))


# ============================================================================
# DISPATCH
# ============================================================================

def _complement_result(result: RecognitionResult) -> RecognitionResult:
    c = result.certificate
    if isinstance(c, NoCertificate):
        c = NoCertificate(complement_id(c.obstruction_id), c.witness, c.promise)
    elif c is not None:
        p = as_mt_partition(c)
        c = MTPartition(p.B, p.A)
    return RecognitionResult(result.verdict, c, result.flags, f"complement/{result.route}")


def _auto(g: Graph) -> RecognitionResult:
    if is_forest(g):
        return recognize_mt_forest(g)
    if len(component_lists(g)) > 1:
        return recognize_mt_disconnected(g, _auto)
    if find_c4(g) is None:
        return recognize_mt_c4free(g)
    if find_p4(g) is None:
        return recognize_mt_cograph(g)
    h = g.complement()
    if is_forest(h) or len(component_lists(h)) > 1 or find_c4(h) is None:
        logger.debug('recognizing the complement')
        return _complement_result(_auto(h))
    return recognize_mt_bounded_nd(g)


ROUTES: dict[str, Callable[[Graph], RecognitionResult]] = {
    'auto': _auto,
    'oracle': recognize_mt_oracle,
    'tree': recognize_mt_tree,
    'forest': recognize_mt_forest,
    'c4free': recognize_mt_c4free,
    'cograph': recognize_mt_cograph,
    'nd': recognize_mt_bounded_nd,
    'split': recognize_split,
    'tc12': recognize_tc12,
}


def recognize(g: Graph, mode: str = 'auto') -> RecognitionResult:
    """Run one route and verify whatever it certifies"""
    try:
        route = ROUTES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}") from None
    result = route(g)
    if result.certificate is not None:
        verdict = verify_certificate(g, result.certificate, graph_class=result_class(result))
        if not verdict:
            logger.error(f"{result.route} certificate failed verification: {verdict}")
            raise RecognitionError(f"{result.route}: emitted certificate does not verify ({verdict})")
    logger.debug(f"{mode}: {result.verdict} via {result.route}")
    return result
