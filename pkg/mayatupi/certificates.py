"""
Certificates and their independent verifiers.

Every recognizer answers with a partition (yes) or an induced obstruction (no);
the functions here check those answers against the input graph without trusting
the code that produced them. Rejections carry a clause id and the offending
vertices so callers (and tests) can see why a certificate fails.
"""

from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from .canon import canonical_form
from .errors import CertificateError
from .graph import Graph, VertexSet

YES = 'yes'
NO = 'no'
UNDECIDED = 'undecided'

# Result flags
PARTITION_OMITTED = 'partition-omitted'
DECISION_ONLY = 'decision-only'
AUDIT_FALLBACK = 'audit-fallback'

GRAPH_CLASSES = ('mt', 'tc12', 'split')


# ============================================================================
# TYPES
# ============================================================================

@dataclass(frozen=True)
class Verdict:
    accepted: bool
    clause: str = ''
    vertices: tuple[int, ...] = ()
    detail: str = ''

    def __bool__(self):
        return self.accepted

    @classmethod
    def accept(cls):
        return cls(True)

    @classmethod
    def reject(cls, clause, vertices=(), detail=''):
        return cls(False, clause, tuple(vertices), detail)

    def __str__(self):
        if self.accepted:
            return 'accepted'
        where = f" at {list(self.vertices)}" if self.vertices else ''
        extra = f": {self.detail}" if self.detail else ''
        return f"rejected [{self.clause}]{where}{extra}"


@dataclass(frozen=True)
class MTPartition:
    A: VertexSet
    B: VertexSet
    kind = 'mt'

    def parts(self):
        return {'A': self.A, 'B': self.B}


@dataclass(frozen=True)
class MTFourPartition:
    K: VertexSet
    Mbar: VertexSet
    S: VertexSet
    M: VertexSet
    kind = 'mt4'

    def parts(self):
        return {'K': self.K, 'Mbar': self.Mbar, 'S': self.S, 'M': self.M}

    def to_two_part(self) -> MTPartition:
        return MTPartition(self.K | self.Mbar, self.S | self.M)


@dataclass(frozen=True)
class TC12Partition:
    A: VertexSet
    B: VertexSet
    kind = 'tc12'

    def parts(self):
        return {'A': self.A, 'B': self.B}


@dataclass(frozen=True)
class SplitPartition:
    K: VertexSet
    S: VertexSet
    kind = 'split'

    def parts(self):
        return {'K': self.K, 'S': self.S}


@dataclass(frozen=True)
class NoCertificate:
    obstruction_id: str
    witness: tuple[int, ...]
    promise: bool = False

    @property
    def kind(self):
        return 'promise-violation' if self.promise else 'obstruction'


Partition = Union[MTPartition, MTFourPartition, TC12Partition, SplitPartition]
Certificate = Union[Partition, NoCertificate]


@dataclass(frozen=True)
class RecognitionResult:
    verdict: str
    certificate: Optional[Certificate] = None
    flags: frozenset = field(default_factory=frozenset)
    route: str = ''

    @property
    def is_member(self) -> bool:
        return self.verdict == YES

    def with_flags(self, *flags):
        return RecognitionResult(self.verdict, self.certificate, self.flags | set(flags), self.route)


def yes(partition, route='', *flags):
    return RecognitionResult(YES, partition, frozenset(flags), route)


def no(certificate=None, route='', *flags):
    return RecognitionResult(NO, certificate, frozenset(flags), route)


def undecided(route='', *flags, certificate=None):
    return RecognitionResult(UNDECIDED, certificate, frozenset(flags), route)


# ============================================================================
# VERIFICATION
# ============================================================================

def _check_partition(g: Graph, parts: Mapping[str, VertexSet]) -> Verdict:
    seen: set[int] = set()
    for name, part in parts.items():
        for v in part:
            if not isinstance(v, int) or not 0 <= v < g.order:
                return Verdict.reject('structural', [v] if isinstance(v, int) else (), f"{name} has out-of-range vertex {v!r}")
            if v in seen:
                return Verdict.reject('structural', [v], f"vertex {v} appears in two parts")
            seen.add(v)
    if len(seen) != g.order:
        missing = [v for v in g.vertices() if v not in seen]
        return Verdict.reject('structural', missing, 'parts do not cover V')
    return Verdict.accept()


def _inside(g: Graph, v: int, part) -> list[int]:
    return [w for w in g.neighbors(v) if w in part]


def _missed(g: Graph, v: int, part) -> list[int]:
    """Vertices of part other than v that v is not adjacent to"""
    nbrs = set(g.neighbors(v))
    return [w for w in part if w != v and w not in nbrs]


def _a_side(g: Graph, a, clause: str) -> Verdict:
    """Every vertex of a misses at most one other vertex of a"""
    a = frozenset(a)
    for v in sorted(a):
        if len(a) - 1 - len(_inside(g, v, a)) > 1:
            return Verdict.reject(clause, [v] + sorted(_missed(g, v, a)), 'degree inside A below |A|-2')
    return Verdict.accept()


def _b_side(g: Graph, b, clause: str) -> Verdict:
    b = frozenset(b)
    for v in sorted(b):
        inside = _inside(g, v, b)
        if len(inside) > 1:
            return Verdict.reject(clause, [v] + inside, 'degree inside B above 1')
    return Verdict.accept()


def verify_mt_partition(g: Graph, p: MTPartition) -> Verdict:
    verdict = _check_partition(g, p.parts())
    if not verdict:
        return verdict
    return _a_side(g, p.A, 'A-min-degree') and _b_side(g, p.B, 'B-max-degree')


def _non_clique(g: Graph, part) -> list[int]:
    return [v for v in sorted(part) if len(_inside(g, v, part)) != len(part) - 1]


def verify_mt_four_partition(g: Graph, p: MTFourPartition) -> Verdict:
    verdict = _check_partition(g, p.parts())
    if not verdict:
        return verdict
    k, mbar, s, m = (frozenset(x) for x in (p.K, p.Mbar, p.S, p.M))
    for v in sorted(s):
        if _inside(g, v, s):
            return Verdict.reject('S-independent', [v] + _inside(g, v, s))
    for v in sorted(m):
        if len(_inside(g, v, m)) != 1:
            return Verdict.reject('M-matching', [v], 'M-vertex degree inside M is not 1')
    for v in sorted(mbar):
        if len(mbar) - 1 - len(_inside(g, v, mbar)) != 1:
            return Verdict.reject('Mbar-antimatching', [v], 'Mbar-vertex misses not exactly one Mbar-vertex')
    bad = _non_clique(g, k)
    if bad:
        return Verdict.reject('K-clique', bad)
    for v in sorted(s):
        if _inside(g, v, m):
            return Verdict.reject('S-M-anticomplete', [v] + _inside(g, v, m))
    for v in sorted(k):
        if len(_inside(g, v, mbar)) != len(mbar):
            return Verdict.reject('K-Mbar-complete', [v] + sorted(_missed(g, v, mbar)))
    return Verdict.accept()


def verify_tc12_partition(g: Graph, p: TC12Partition) -> Verdict:
    verdict = _check_partition(g, p.parts())
    if not verdict:
        return verdict
    bad = _non_clique(g, frozenset(p.A))
    if bad:
        return Verdict.reject('A-clique', bad)
    return _b_side(g, p.B, 'B-components')


def verify_split_partition(g: Graph, p: SplitPartition) -> Verdict:
    verdict = _check_partition(g, p.parts())
    if not verdict:
        return verdict
    bad = _non_clique(g, frozenset(p.K))
    if bad:
        return Verdict.reject('K-clique', bad)
    s = frozenset(p.S)
    for v in sorted(s):
        if _inside(g, v, s):
            return Verdict.reject('S-independent', [v] + _inside(g, v, s))
    return Verdict.accept()


def _catalogued(c: NoCertificate, catalog, graph_class: Optional[str]) -> list[tuple[Graph, bool]]:
    """(graph, is_promise) entries the id can name"""
    if catalog is not None:
        target = catalog.get(c.obstruction_id)
        return [] if target is None else [(target, c.obstruction_id in getattr(catalog, 'promise', ()))]
    from .catalog import class_obstruction
    classes = (graph_class,) if graph_class else GRAPH_CLASSES
    found = (class_obstruction(name, c.obstruction_id) for name in classes)
    return [entry for entry in found if entry is not None]


def verify_no_certificate(g: Graph, c: NoCertificate, catalog: Optional[Mapping[str, Graph]] = None,
                          graph_class: Optional[str] = None) -> Verdict:
    """Witness must induce a graph isomorphic to an obstruction of the claimed class

    Without a catalog the id is looked up among graph_class's obstructions, or
    among those of every class when graph_class is None. Promise entries only
    back promise-violation certificates and vice versa.
    """
    if graph_class is not None and graph_class not in GRAPH_CLASSES:
        raise CertificateError(f"unknown graph class {graph_class!r}")
    entries = _catalogued(c, catalog, graph_class)
    if not entries:
        return Verdict.reject('unknown-obstruction', (), c.obstruction_id)
    matching = [target for target, promise in entries if promise == c.promise]
    if not matching:
        expected = 'promise-violation' if entries[0][1] else 'obstruction'
        return Verdict.reject('certificate-kind', (), f"{c.obstruction_id} is certified as {expected}, not {c.kind}")
    target = matching[0]
    witness = list(c.witness)
    for v in witness:
        if not isinstance(v, int) or not 0 <= v < g.order:
            return Verdict.reject('structural', (), f"witness vertex {v!r} out of range")
    if len(set(witness)) != len(witness):
        return Verdict.reject('structural', witness, 'repeated witness vertex')
    if len(witness) != target.order:
        return Verdict.reject('witness-order', witness, f"{len(witness)} vertices for a {target.order}-vertex obstruction")
    induced, _ = g.induced_subgraph(witness)
    got, want = canonical_form(induced), canonical_form(target)
    if got != want:
        return Verdict.reject('witness-isomorphism', witness, f"induced {got.hex()} != {c.obstruction_id} {want.hex()}")
    return Verdict.accept()


def verify_certificate(g: Graph, c: Certificate, catalog=None, graph_class: Optional[str] = None) -> Verdict:
    if isinstance(c, NoCertificate):
        return verify_no_certificate(g, c, catalog, graph_class)
    if isinstance(c, MTFourPartition):
        return verify_mt_four_partition(g, c)
    if isinstance(c, MTPartition):
        return verify_mt_partition(g, c)
    if isinstance(c, TC12Partition):
        return verify_tc12_partition(g, c)
    if isinstance(c, SplitPartition):
        return verify_split_partition(g, c)
    raise CertificateError(f"unknown certificate type {type(c).__name__}")


# ============================================================================
# CONVERSIONS
# ============================================================================

def two_part_to_four(g: Graph, p: MTPartition) -> MTFourPartition:
    verdict = verify_mt_partition(g, p)
    if not verdict:
        raise CertificateError(f"input MT-partition does not verify: {verdict}")
    a, b = frozenset(p.A), frozenset(p.B)
    k = frozenset(v for v in a if len(_inside(g, v, a)) == len(a) - 1)
    s = frozenset(v for v in b if not _inside(g, v, b))
    return MTFourPartition(k, a - k, s, b - s)


def complement_partition(p: MTPartition) -> MTPartition:
    """(A, B) for G is (B, A) for the complement of G"""
    return MTPartition(p.B, p.A)


def as_mt_partition(p: Partition) -> MTPartition:
    """Split and (1,2)-tc partitions are MT-partitions with the same sides"""
    if isinstance(p, MTPartition):
        return p
    if isinstance(p, MTFourPartition):
        return p.to_two_part()
    if isinstance(p, TC12Partition):
        return MTPartition(p.A, p.B)
    if isinstance(p, SplitPartition):
        return MTPartition(p.K, p.S)
    raise CertificateError(f"cannot convert {type(p).__name__}")


# ============================================================================
# JSON DOCUMENTS
# ============================================================================

_PARTITION_KINDS = {
    'mt': (MTPartition, ('A', 'B')),
    'mt4': (MTFourPartition, ('K', 'Mbar', 'S', 'M')),
    'tc12': (TC12Partition, ('A', 'B')),
    'split': (SplitPartition, ('K', 'S')),
}
_WITNESS_KINDS = ('obstruction', 'promise-violation')


def result_class(result: RecognitionResult) -> str:
    """Class a result's witness is an obstruction for; the split and tc12 routes certify their own classes"""
    head = result.route.split('/')[0]
    return head if head in ('tc12', 'split') else 'mt'


def to_document(result: RecognitionResult) -> dict:
    """Serialize a result to the certificate JSON layout"""
    doc = {'verdict': result.verdict, 'kind': 'none', 'obstruction_id': None}
    c = result.certificate
    if isinstance(c, NoCertificate):
        doc['kind'] = c.kind
        doc['witness'] = list(c.witness)
        doc['obstruction_id'] = c.obstruction_id
    elif c is not None:
        doc['kind'] = c.kind
        doc['partition'] = {name: sorted(part) for name, part in c.parts().items()}
    if result.flags:
        doc['flags'] = sorted(result.flags)
    if result.route:
        doc['route'] = result.route
    if isinstance(c, NoCertificate):
        doc['class'] = result_class(result)
    return doc


def _vertex_list(value, where):
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise CertificateError(f"{where} must be a list of integers")
    return value


def from_document(doc) -> Optional[Certificate]:
    """Parse a certificate document; CertificateError on any schema mismatch"""
    if not isinstance(doc, dict):
        raise CertificateError('certificate document must be a JSON object')
    for key in ('verdict', 'kind'):
        if key not in doc:
            raise CertificateError(f"missing field {key!r}")
    if doc['verdict'] not in (YES, NO, UNDECIDED):
        raise CertificateError(f"bad verdict {doc['verdict']!r}")
    kind = doc['kind']
    if kind in _PARTITION_KINDS:
        cls, names = _PARTITION_KINDS[kind]
        parts = doc.get('partition')
        if not isinstance(parts, dict) or set(parts) != set(names):
            raise CertificateError(f"kind {kind!r} needs partition fields {list(names)}")
        return cls(**{name: frozenset(_vertex_list(parts[name], f"partition.{name}")) for name in names})
    if kind in _WITNESS_KINDS:
        oid = doc.get('obstruction_id')
        if not isinstance(oid, str):
            raise CertificateError('obstruction_id must be a string')
        witness = _vertex_list(doc.get('witness'), 'witness')
        return NoCertificate(oid, tuple(witness), kind == 'promise-violation')
    if kind == 'none':
        return None
    raise CertificateError(f"unknown kind {kind!r}")


def document_class(doc) -> Optional[str]:
    """The 'class' field of a certificate document, when present"""
    value = doc.get('class') if isinstance(doc, dict) else None
    if value is not None and value not in GRAPH_CLASSES:
        raise CertificateError(f"bad class {value!r}; expected one of {', '.join(GRAPH_CLASSES)}")
    return value
