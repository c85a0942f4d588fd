"""
Induced-subgraph search by backtracking.

Pattern vertices are matched in a connectivity-first order; host candidates for
each pattern vertex are narrowed with bitmask intersections against the images
of already-matched vertices, so every partial map is already an induced embedding.
"""

from typing import Optional

from .graph import Graph, bits

PATTERN_CAP = 10


def _match_order(pattern: Graph) -> list[int]:
    """Greedy order: next vertex has the most already-ordered neighbours, then highest degree"""
    remaining = set(pattern.vertices())
    order: list[int] = []
    placed = 0
    while remaining:
        best = max(remaining, key=lambda p: (pattern.degree_in(p, placed), pattern.degree(p), -p))
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def find_induced(pattern: Graph, host: Graph, within: Optional[int] = None) -> Optional[list[int]]:
    """
    Injective map phi (list indexed by pattern vertex) with
    phi(u)phi(v) in E(host) iff uv in E(pattern), or None.

    `within` restricts the host vertices that may be used.
    """
    k = pattern.order
    if k > PATTERN_CAP:
        raise ValueError(f"pattern order {k} exceeds cap {PATTERN_CAP}")
    allowed = host.full_mask if within is None else within & host.full_mask
    if k > allowed.bit_count():
        return None
    if k == 0:
        return []

    order = _match_order(pattern)
    pdeg = [pattern.degree(p) for p in range(k)]
    hdeg = [host.degree_in(v, allowed) for v in range(host.order)]
    hadj = host.masks
    phi = [-1] * k

    def extend(depth, used):
        if depth == k:
            return True
        p = order[depth]
        cand = allowed & ~used
        for q in order[:depth]:
            image = phi[q]
            if pattern.adjacent(p, q):
                cand &= hadj[image]
            else:
                cand &= ~hadj[image]
        for v in bits(cand):
            if hdeg[v] < pdeg[p]:
                continue
            phi[p] = v
            if extend(depth + 1, used | (1 << v)):
                return True
        phi[p] = -1
        return False

    if extend(0, 0):
        return list(phi)
    return None


def is_induced_copy(pattern: Graph, host: Graph, phi: list[int]) -> bool:
    """Edge-by-edge check of a claimed induced embedding"""
    if len(phi) != pattern.order or len(set(phi)) != len(phi):
        return False
    if any(not 0 <= v < host.order for v in phi):
        return False
    for u in range(pattern.order):
        for v in range(u + 1, pattern.order):
            if pattern.adjacent(u, v) != host.adjacent(phi[u], phi[v]):
                return False
    return True


def contains_induced(pattern: Graph, host: Graph) -> bool:
    return find_induced(pattern, host) is not None
