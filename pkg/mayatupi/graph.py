"""
╔══════════════════════════════════════════════════════════════════════════════╗
║                              GRAPH CORE                                      ║
╠══════════════════════════════════════════════════════════════════════════════╣
║  Immutable simple graph on vertices 0..n-1 (neighbour tuples, with lazy     ║
║  per-vertex bitmasks for the small-graph routines), graph6 / edge-list IO   ║
║  and the structural queries every recognizer builds on.                      ║
╚══════════════════════════════════════════════════════════════════════════════╝
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import networkx as nx

from .errors import GraphFormatError

# A vertex set is a plain frozenset of vertex indices; bitmasks are used internally
VertexSet = frozenset

GRAPH6_MAX_ORDER = 2 ** 18 - 1


# ============================================================================
# BITMASK HELPERS
# ============================================================================

def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# ============================================================================
# GRAPH VALUE TYPE
# ============================================================================

class Graph:
    """
    Immutable simple graph.

    Neighbour tuples are the primary store; per-vertex bitmasks are built on
    first use. Small-graph routines (search, canonical forms, oracles) work on
    the masks, while the tree route and the verifiers stay on the tuples so
    they scale to graphs where n bitmasks of n bits would not fit.
    """

    __slots__ = ('_order', '_nbrs', '_adj', '_size')

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        sets: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge {u}-{v} out of range for order {order}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self._order = order
        self._nbrs = tuple(tuple(sorted(s)) for s in sets)
        self._adj = None
        self._size = sum(len(s) for s in sets) // 2

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> 'Graph':
        """Build from per-vertex neighbour masks (assumed symmetric and loop-free)"""
        g = cls.__new__(cls)
        g._adj = tuple(masks)
        g._order = len(g._adj)
        g._nbrs = None
        g._size = sum(a.bit_count() for a in g._adj) // 2
        return g

    @classmethod
    def from_neighbours(cls, nbrs: Iterable[Iterable[int]]) -> 'Graph':
        """Build from per-vertex neighbour lists (assumed symmetric and loop-free)"""
        g = cls.__new__(cls)
        g._nbrs = tuple(tuple(sorted(vs)) for vs in nbrs)
        g._order = len(g._nbrs)
        g._adj = None
        g._size = sum(len(vs) for vs in g._nbrs) // 2
        return g

    @classmethod
    def from_networkx(cls, nxg) -> 'Graph':
        """Relabel nodes by sorted order and copy the edge set"""
        nodes = sorted(nxg.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in nxg.edges() if u != v))

    def to_networkx(self):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self._order))
        nxg.add_edges_from(self.edges())
        return nxg

    # --- representations ---------------------------------------------------

    @property
    def masks(self) -> tuple[int, ...]:
        if self._adj is None:
            self._adj = tuple(mask_of(vs) for vs in self._nbrs)
        return self._adj

    @property
    def neighbour_lists(self) -> tuple[tuple[int, ...], ...]:
        if self._nbrs is None:
            self._nbrs = tuple(tuple(bits(a)) for a in self._adj)
        return self._nbrs

    # --- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def size(self) -> int:
        return self._size

    @property
    def full_mask(self) -> int:
        return (1 << self._order) - 1

    def vertices(self) -> range:
        return range(self._order)

    def adjacent(self, u: int, v: int) -> bool:
        if self._adj is not None:
            return (self._adj[u] >> v) & 1 == 1
        return v in self._nbrs[u]

    def mask(self, v: int) -> int:
        return self.masks[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.neighbour_lists[v]

    def degree(self, v: int) -> int:
        if self._nbrs is not None:
            return len(self._nbrs[v])
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self._order)]

    def degree_in(self, v: int, mask: int) -> int:
        """Number of neighbours of v inside the vertex mask"""
        return (self.masks[v] & mask).bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, vs in enumerate(self.neighbour_lists):
            for v in vs:
                if v > u:
                    yield u, v

    def is_clique(self, mask: int) -> bool:
        adj = self.masks
        for v in bits(mask):
            if (mask & ~adj[v]) != (1 << v):
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        adj = self.masks
        return all(adj[v] & mask == 0 for v in bits(mask))

    # --- derived graphs ----------------------------------------------------

    def complement(self) -> 'Graph':
        full = self.full_mask
        return Graph.from_masks(full & ~a & ~(1 << v) for v, a in enumerate(self.masks))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple['Graph', list[int]]:
        """Subgraph induced by vertices, plus the new-to-old vertex map"""
        old = sorted(set(vertices))
        for v in old:
            if not 0 <= v < self._order:
                raise ValueError(f"vertex {v} out of range for order {self._order}")
        index = {v: i for i, v in enumerate(old)}
        nbrs = self.neighbour_lists
        return Graph.from_neighbours([index[w] for w in nbrs[v] if w in index] for v in old), old

    def without(self, v: int) -> 'Graph':
        """The graph minus vertex v, vertices above v shifted down by one"""
        return self.induced_subgraph(w for w in range(self._order) if w != v)[0]

    def with_vertex(self, neighbour_mask: int) -> 'Graph':
        """The graph plus a new last vertex adjacent to neighbour_mask"""
        n = self._order
        masks = [a | ((neighbour_mask >> v) & 1) << n for v, a in enumerate(self.masks)]
        masks.append(neighbour_mask)
        return Graph.from_masks(masks)

    def relabel(self, order: list[int]) -> 'Graph':
        """Graph whose vertex i is the old vertex order[i]"""
        position = {v: i for i, v in enumerate(order)}
        nbrs = self.neighbour_lists
        return Graph.from_neighbours([position[w] for w in nbrs[v]] for v in order)

    def disjoint_union(self, other: 'Graph') -> 'Graph':
        shift = self._order
        return Graph.from_neighbours(
            list(self.neighbour_lists) + [[w + shift for w in vs] for vs in other.neighbour_lists])

    # --- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.neighbour_lists == other.neighbour_lists

    def __hash__(self):
        return hash(self.neighbour_lists)

    def __repr__(self):
        return f"Graph(order={self._order}, size={self._size})"


# ============================================================================
# SMALL NAMED GRAPHS
# ============================================================================

def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> Graph:
    return Graph(n)


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    result = Graph(0)
    for g in graphs:
        result = result.disjoint_union(g)
    return result


# ============================================================================
# SERIALIZATION
# ============================================================================

def write_graph6(g: Graph) -> str:
    """Encode g as a graph6 line (without the trailing newline)"""
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise ValueError(f"graph6 supports order < 2^18, got {n}")
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ['~'] + [chr(63 + ((n >> s) & 63)) for s in (12, 6, 0)]
    value = 0
    count = 0
    adj = g.masks
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            value = (value << 1) | ((aj >> i) & 1)
            count += 1
            if count == 6:
                out.append(chr(63 + value))
                value = 0
                count = 0
    if count:
        out.append(chr(63 + (value << (6 - count))))
    return ''.join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; raises GraphFormatError naming the byte offset"""
    line = text.rstrip('\r\n')
    start = 0
    if line.startswith('>>graph6<<'):
        start = len('>>graph6<<')
    for offset in range(start, len(line)):
        if not 63 <= ord(line[offset]) <= 126:
            raise GraphFormatError(f"character {line[offset]!r} outside graph6 range", offset)
    if start >= len(line):
        raise GraphFormatError("missing length header", start)
    pos = start
    if line[pos] == '~':
        if pos + 1 < len(line) and line[pos + 1] == '~':
            raise GraphFormatError("8-byte length header (order >= 2^18) is not supported", pos)
        if pos + 4 > len(line):
            raise GraphFormatError("truncated 4-byte length header", pos)
        n = 0
        for k in range(1, 4):
            n = (n << 6) | (ord(line[pos + k]) - 63)
        pos += 4
    else:
        n = ord(line[pos]) - 63
        pos += 1
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = line[pos:]
    if len(body) != expected:
        raise GraphFormatError(
            f"expected {expected} edge bytes for order {n}, found {len(body)}", pos + min(len(body), expected))
    adj: list[list[int]] = [[] for _ in range(n)]
    i, j = 0, 1
    for k, ch in enumerate(body):
        value = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = (value >> shift) & 1
            if j >= n:
                if bit:
                    raise GraphFormatError("nonzero padding bits", pos + k)
                continue
            if bit:
                adj[i].append(j)
                adj[j].append(i)
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph.from_neighbours(adj)


def parse_edge_list(text: str) -> Graph:
    """First token is n, then pairs 'u v'; duplicates allowed, '#' starts a comment"""
    tokens = []
    for line in text.splitlines():
        line = line.split('#', 1)[0]
        tokens.extend(line.split())
    if not tokens:
        raise GraphFormatError("empty edge list", 0)
    values = []
    for index, token in enumerate(tokens):
        try:
            values.append(int(token))
        except ValueError:
            raise GraphFormatError(f"non-integer token {token!r}", index) from None
    n = values[0]
    if n < 0:
        raise GraphFormatError(f"negative order {n}", 0)
    rest = values[1:]
    if len(rest) % 2:
        raise GraphFormatError("odd number of endpoint tokens", len(values) - 1)
    adj: list[set[int]] = [set() for _ in range(n)]
    for k in range(0, len(rest), 2):
        u, v = rest[k], rest[k + 1]
        for offset, x in ((k + 1, u), (k + 2, v)):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex {x} out of range for order {n}", offset)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", k + 1)
        adj[u].add(v)
        adj[v].add(u)
    return Graph.from_neighbours(adj)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.order)] + [f"{u} {v}" for u, v in g.edges()]
    return '\n'.join(lines) + '\n'


def read_graph(text: str, fmt: str = 'auto') -> Graph:
    """Parse either format; 'auto' picks edge-list when the first token is an integer"""
    if fmt == 'auto':
        stripped = text.strip()
        first = stripped.split(None, 1)[0] if stripped else ''
        fmt = 'edges' if first.lstrip('-').isdigit() else 'g6'
    if fmt == 'edges':
        return parse_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}", 0)
    return parse_graph6(lines[0].strip())


# ============================================================================
# STRUCTURE
# ============================================================================

def complement(g: Graph) -> Graph:
    return g.complement()


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    return g.induced_subgraph(vertices)


def component_masks(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components of g[within] as masks, by ascending minimum vertex"""
    remaining = g.full_mask if within is None else within
    adj = g.masks
    result = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            reach &= remaining & ~comp
            comp |= reach
            frontier = reach
        result.append(comp)
        remaining &= ~comp
    return result


def component_lists(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists by ascending minimum vertex; BFS on neighbour tuples"""
    nbrs = g.neighbour_lists
    seen = bytearray(g.order)
    result = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        result.append(comp)
    return result


def connected_components(g: Graph) -> list[VertexSet]:
    return [frozenset(c) for c in component_lists(g)]


def is_connected(g: Graph) -> bool:
    return g.order <= 1 or len(component_lists(g)) == 1


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _bfs_parents(g: Graph, source: int) -> tuple[dict[int, int], dict[int, Optional[int]]]:
    dist = {source: 0}
    parent: dict[int, Optional[int]] = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue.append(w)
    return dist, parent


def _walk_back(parent, end):
    out = []
    while end is not None:
        out.append(end)
        end = parent[end]
    return out


@dataclass(frozen=True)
class DiameterPath:
    path: tuple[int, ...]
    centers: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.path) - 1


def diameter_path(g: Graph) -> Optional[DiameterPath]:
    """A longest shortest path and its middle vertex or vertices; None if disconnected"""
    if g.order == 0 or not is_connected(g):
        return None
    if is_tree(g):
        # double BFS is exact on trees
        dist, _ = _bfs_parents(g, 0)
        far = max(dist, key=lambda v: (dist[v], -v))
        dist, parent = _bfs_parents(g, far)
        other = max(dist, key=lambda v: (dist[v], -v))
        walk = tuple(reversed(_walk_back(parent, other)))
    else:
        best = None
        for s in g.vertices():
            dist, parent = _bfs_parents(g, s)
            t = max(dist, key=lambda v: (dist[v], -v))
            if best is None or dist[t] > best[0]:
                best = (dist[t], tuple(reversed(_walk_back(parent, t))))
        walk = best[1]
    k = len(walk)
    centers = (walk[k // 2],) if k % 2 else (walk[k // 2 - 1], walk[k // 2])
    return DiameterPath(walk, centers)


def is_forest(g: Graph) -> bool:
    return g.size == g.order - len(component_lists(g))


def is_tree(g: Graph) -> bool:
    return g.order >= 1 and g.size == g.order - 1 and is_connected(g)


def find_p4(g: Graph) -> Optional[list[int]]:
    """An induced path x-b-c-y as a vertex list, or None"""
    adj = g.masks
    for b, c in g.edges():
        xs = adj[b] & ~adj[c] & ~(1 << c)
        ys = adj[c] & ~adj[b] & ~(1 << b)
        if not xs or not ys:
            continue
        for x in bits(xs):
            free = ys & ~adj[x]
            if free:
                return [x, b, c, lowest(free)]
    return None


def is_cograph(g: Graph) -> bool:
    return find_p4(g) is None


def find_c4(g: Graph) -> Optional[list[int]]:
    """An induced 4-cycle in cyclic order, or None"""
    adj = g.masks
    n = g.order
    for u in range(n):
        for v in range(u + 1, n):
            if (adj[u] >> v) & 1:
                continue
            common = adj[u] & adj[v]
            for w in bits(common):
                rest = common & ~adj[w] & ~(1 << w)
                if rest:
                    return [u, w, v, lowest(rest)]
    return None


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS order by partition refinement"""
    cells = [list(g.vertices())] if g.order else []
    order = []
    while cells:
        v = cells[0].pop(0)
        if not cells[0]:
            cells.pop(0)
        order.append(v)
        nv = g.mask(v)
        refined = []
        for cell in cells:
            inside = [w for w in cell if (nv >> w) & 1]
            outside = [w for w in cell if not (nv >> w) & 1]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        cells = refined
    return order


def is_chordal(g: Graph) -> bool:
    """LexBFS, then check the reverse order is a perfect elimination ordering"""
    order = lex_bfs(g)
    position = {v: i for i, v in enumerate(order)}
    adj = g.masks
    for v in order:
        earlier = [w for w in bits(adj[v]) if position[w] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=position.__getitem__)
        rest = mask_of(earlier) & ~(1 << parent)
        if rest & ~adj[parent]:
            return False
    return True


def max_degree_within(g: Graph, mask: int) -> int:
    return max((g.degree_in(v, mask) for v in bits(mask)), default=0)
