"""
Canonical forms for small graphs.

Degree partition, equitable refinement, then individualization with
backtracking over the first non-singleton cell. The form is the least
upper-triangle adjacency code over all leaves of that search tree.
Twins inside a cell lead to identical subtrees, so only one of each is tried.
"""

from typing import Optional

from . import config
from .errors import SizeLimitError
from .graph import Graph, mask_of

CanonicalForm = bytes


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable"""
    while True:
        masks = [mask_of(c) for c in cells]
        refined: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    refined.append(groups[sig])
            else:
                refined.append(cell)
        cells = refined
        if not changed:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle bits in graph6 order, first bit most significant"""
    value = 0
    for j in range(1, len(order)):
        aj = adj[order[j]]
        for i in range(j):
            value = (value << 1) | ((aj >> order[i]) & 1)
    return value


def canonical_labeling(g: Graph, cap: Optional[int] = None) -> tuple[CanonicalForm, list[int]]:
    """(form, order) where order[i] is the vertex placed at canonical position i"""
    n = g.order
    cap = config.settings.canon_cap if cap is None else cap
    if n > cap:
        raise SizeLimitError('canonical_form', n, cap)
    adj = g.masks
    if n == 0:
        return bytes([0]), []

    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]

    best_code = -1
    best_order: list[int] = []

    def twins(u, v):
        return (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u))

    def search(cells):
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            # the least code wins; best_code starts below every real code
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            return
        target = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(start)
    nbits = n * (n - 1) // 2
    body = best_code.to_bytes((nbits + 7) // 8, 'big') if nbits else b''
    return bytes([n]) + body, best_order


def canonical_form(g: Graph, cap: Optional[int] = None) -> CanonicalForm:
    return canonical_labeling(g, cap)[0]


def canonical_graph(g: Graph) -> Graph:
    """g relabelled into canonical order"""
    return g.relabel(canonical_labeling(g)[1])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def from_canonical_form(form: CanonicalForm) -> Graph:
    """The canonical representative a form encodes"""
    n = form[0]
    nbits = n * (n - 1) // 2
    value = int.from_bytes(form[1:], 'big') if nbits else 0
    edges = []
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if (value >> k) & 1:
                edges.append((i, j))
    return Graph(n, edges)
