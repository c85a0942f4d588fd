"""
Type classes, twin reduction and the type-class profile search.

Two vertices have the same type when N(u) - {v} = N(v) - {u}. Inside a class the
members are either pairwise adjacent (true twins) or pairwise non-adjacent
(false twins), and any permutation of a class is an automorphism. That makes a
partition of the whole graph a choice of counts per class: a clique class puts
at most two members in B, an independent class at most two in A.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import config
from .certificates import MTPartition
from .errors import BudgetExceeded
from .graph import Graph, bits, mask_of
from .oracle import max_degree_le1, min_degree_ge_size_minus2

logger = logging.getLogger(__name__)

TRUE_TWINS = 'true'
FALSE_TWINS = 'false'
SINGLE = 'single'

# members kept per class by twin_reduce
KEEP = 3


@dataclass(frozen=True)
class TypeClass:
    members: tuple[int, ...]
    tag: str


@dataclass(frozen=True)
class TypePartition:
    classes: tuple[TypeClass, ...]

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    @property
    def diversity(self) -> int:
        return len(self.classes)


def type_partition(g: Graph) -> TypePartition:
    """Classes by ascending least member"""
    nbrs = g.neighbour_lists
    open_groups: dict[tuple, list[int]] = {}
    closed_groups: dict[tuple, list[int]] = {}
    for v in g.vertices():
        open_groups.setdefault(nbrs[v], []).append(v)
        closed_groups.setdefault(tuple(sorted(nbrs[v] + (v,))), []).append(v)
    classes = []
    placed = set()
    for groups, tag in ((closed_groups, TRUE_TWINS), (open_groups, FALSE_TWINS)):
        for members in groups.values():
            if len(members) > 1:
                classes.append(TypeClass(tuple(members), tag))
                placed.update(members)
    classes += [TypeClass((v,), SINGLE) for v in g.vertices() if v not in placed]
    classes.sort(key=lambda c: c.members[0])
    return TypePartition(tuple(classes))


def twin_reduce(g: Graph, types: Optional[TypePartition] = None) -> tuple[Graph, list[int]]:
    """Kernel keeping the lowest three members of each class, plus kernel-to-g vertex map"""
    types = types or type_partition(g)
    kept = sorted(v for c in types for v in c.members[:KEEP])
    kernel, old = g.induced_subgraph(kept)
    logger.debug(f"twin reduction: {g.order} -> {kernel.order} vertices over {len(types)} classes")
    return kernel, old


def lift_partition(g: Graph, types: TypePartition, kept: list[int], kernel_a) -> MTPartition:
    """
    Extend a kernel partition to g: dropped true twins go to A, dropped false
    twins to B. Not always valid; callers verify and fall back to profile_search.
    """
    in_a = {kept[v] for v in kernel_a}
    a = set(in_a)
    for c in types:
        dropped = c.members[KEEP:]
        if dropped and c.tag == TRUE_TWINS:
            a.update(dropped)
    a = frozenset(a)
    return MTPartition(a, frozenset(v for v in g.vertices() if v not in a))


def _choices(c: TypeClass) -> list[int]:
    """Vertices of the class placed in A under each profile"""
    members = c.members
    if c.tag == SINGLE:
        return [mask_of(members), 0]
    if c.tag == TRUE_TWINS:
        # at most two clique members in B
        return [mask_of(members[:len(members) - b]) for b in range(min(2, len(members)) + 1)]
    return [mask_of(members[:k]) for k in range(min(2, len(members)) + 1)]


def profile_search(g: Graph, types: Optional[TypePartition] = None, budget: Optional[int] = None) -> Optional[MTPartition]:
    """
    Exhaustive over per-class profiles; None when g is not MT.
    Raises BudgetExceeded after `budget` assemblies.
    """
    types = types or type_partition(g)
    budget = config.settings.profile_budget if budget is None else budget
    full = g.full_mask
    tried = 0
    for picks in product(*(_choices(c) for c in types)):
        tried += 1
        if tried > budget:
            raise BudgetExceeded(f"profile search over {len(types)} classes exceeded {budget} assemblies")
        a = 0
        for pick in picks:
            a |= pick
        if min_degree_ge_size_minus2(g, a) and max_degree_le1(g, full & ~a):
            logger.debug(f"profile search hit after {tried} assemblies")
            return MTPartition(frozenset(bits(a)), frozenset(bits(full & ~a)))
    return None
