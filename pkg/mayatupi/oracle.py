"""
Brute-force ground truth.

A vertex-by-vertex A/B assignment search with incremental pruning decides MT,
(1,2)-tc and split membership exactly. mt_bruteforce and friends iterate |A|
upwards and try A before B at every vertex, so the first hit is the least A by
(size, sorted tuple). Every fast recognizer is tested against these.
"""

from typing import Callable, Optional

from . import config
from .certificates import MTPartition, SplitPartition, TC12Partition
from .errors import SizeLimitError
from .graph import Graph, bits, mask_of

# A-side rules
_A_MT = 'mt'          # every A-vertex misses at most one other A-vertex
_A_CLIQUE = 'clique'
# B-side rules
_B_MATCHING = 'matching'  # max degree 1
_B_INDEPENDENT = 'independent'


class PartitionSearch:
    """Exact search for (A, B) under one A-rule and one B-rule"""

    __slots__ = ('adj', 'n', 'a_rule', 'b_rule')

    def __init__(self, g: Graph, a_rule: str, b_rule: str):
        self.adj = g.masks
        self.n = g.order
        self.a_rule = a_rule
        self.b_rule = b_rule

    def _a_ok(self, v, a):
        adj = self.adj
        if self.a_rule == _A_CLIQUE:
            return a & ~adj[v] == 0
        missed = a & ~adj[v]
        if missed == 0:
            return True
        if missed & (missed - 1):
            return False
        # the single missed vertex must not already miss someone else
        w = missed.bit_length() - 1
        return a & ~adj[w] & ~(1 << w) == 0

    def _b_ok(self, v, b):
        adj = self.adj
        inside = adj[v] & b
        if self.b_rule == _B_INDEPENDENT:
            return inside == 0
        if inside == 0:
            return True
        if inside & (inside - 1):
            return False
        w = inside.bit_length() - 1
        return adj[w] & b == 0

    def find(self, size: Optional[int] = None) -> Optional[int]:
        """A-mask of a valid partition (with |A| == size when given), lexicographically least"""
        n = self.n
        target = size

        def extend(i, a, b, count):
            if i == n:
                return a if target is None or count == target else None
            left = n - i
            if target is not None:
                if count + left < target:
                    return None
            if target is None or count < target:
                if self._a_ok(i, a):
                    found = extend(i + 1, a | (1 << i), b, count + 1)
                    if found is not None:
                        return found
            if target is None or count + left - 1 >= target:
                if self._b_ok(i, b):
                    return extend(i + 1, a, b | (1 << i), count)
            return None

        return extend(0, 0, 0, 0)

    def least(self) -> Optional[int]:
        for k in range(self.n + 1):
            found = self.find(k)
            if found is not None:
                return found
        return None

    def exists(self) -> bool:
        return self.find() is not None


def _check_cap(g: Graph, what: str, cap: Optional[int] = None):
    cap = config.settings.oracle_cap if cap is None else cap
    if g.order > cap:
        raise SizeLimitError(what, g.order, cap)


def _sides(g: Graph, a: int) -> tuple[frozenset, frozenset]:
    return frozenset(bits(a)), frozenset(bits(g.full_mask & ~a))


# ============================================================================
# ORACLES
# ============================================================================

def mt_bruteforce(g: Graph) -> Optional[MTPartition]:
    _check_cap(g, 'mt_bruteforce')
    a = PartitionSearch(g, _A_MT, _B_MATCHING).least()
    return None if a is None else MTPartition(*_sides(g, a))


def tc12_bruteforce(g: Graph) -> Optional[TC12Partition]:
    _check_cap(g, 'tc12_bruteforce')
    a = PartitionSearch(g, _A_CLIQUE, _B_MATCHING).least()
    return None if a is None else TC12Partition(*_sides(g, a))


def split_bruteforce(g: Graph) -> Optional[SplitPartition]:
    _check_cap(g, 'split_bruteforce')
    a = PartitionSearch(g, _A_CLIQUE, _B_INDEPENDENT).least()
    return None if a is None else SplitPartition(*_sides(g, a))


# Decision-only variants skip the size iteration; used in bulk by enumeration
def is_mt(g: Graph, cap: Optional[int] = None) -> bool:
    _check_cap(g, 'is_mt', cap)
    return PartitionSearch(g, _A_MT, _B_MATCHING).exists()


def is_tc12(g: Graph) -> bool:
    _check_cap(g, 'is_tc12')
    return PartitionSearch(g, _A_CLIQUE, _B_MATCHING).exists()


def is_split(g: Graph) -> bool:
    _check_cap(g, 'is_split')
    return PartitionSearch(g, _A_CLIQUE, _B_INDEPENDENT).exists()


MEMBERSHIP: dict[str, Callable[[Graph], bool]] = {
    'mt': is_mt,
    'tc12': is_tc12,
    'split': is_split,
}


def is_minimal_obstruction(g: Graph, membership: Callable[[Graph], bool]) -> bool:
    """g is outside the class and every one-vertex deletion is inside"""
    if membership(g):
        return False
    return all(membership(g.without(v)) for v in g.vertices())


# ============================================================================
# CLAUSE PRIMITIVES
# ============================================================================

def max_degree_le1(g: Graph, s) -> bool:
    mask = s if isinstance(s, int) else mask_of(s)
    for v in bits(mask):
        inside = g.mask(v) & mask
        if inside & (inside - 1):
            return False
    return True


def min_degree_ge_size_minus2(g: Graph, s) -> bool:
    mask = s if isinstance(s, int) else mask_of(s)
    for v in bits(mask):
        missed = mask & ~g.mask(v) & ~(1 << v)
        if missed & (missed - 1):
            return False
    return True
