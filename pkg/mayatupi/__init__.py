"""
mayatupi - certifying recognition of Maya-Tupi graphs.

Every recognizer answers with something checkable: a partition of the vertex
set, or a set of vertices inducing a catalogued obstruction.
"""

__version__ = '0.3.0'

from .certificates import (  # noqa: E402
    MTFourPartition, MTPartition, NoCertificate, RecognitionResult, SplitPartition, TC12Partition,
    Verdict, verify_certificate,
)
from .graph import Graph, parse_edge_list, parse_graph6, read_graph, write_graph6  # noqa: E402
from .mt import (  # noqa: E402
    is_nice, recognize, recognize_mt_bounded_nd, recognize_mt_c4free, recognize_mt_cograph,
    recognize_mt_disconnected, recognize_mt_forest,
)
from .oracle import mt_bruteforce, split_bruteforce, tc12_bruteforce  # noqa: E402
from .split import recognize_split  # noqa: E402
from .tc12 import recognize_tc12  # noqa: E402
from .trees import recognize_mt_tree  # noqa: E402

__all__ = [
    'Graph', 'parse_graph6', 'write_graph6', 'parse_edge_list', 'read_graph',
    'MTPartition', 'MTFourPartition', 'TC12Partition', 'SplitPartition', 'NoCertificate',
    'RecognitionResult', 'Verdict', 'verify_certificate',
    'mt_bruteforce', 'tc12_bruteforce', 'split_bruteforce',
    'recognize', 'recognize_split', 'recognize_tc12', 'recognize_mt_tree', 'recognize_mt_forest',
    'recognize_mt_c4free', 'recognize_mt_disconnected', 'recognize_mt_cograph', 'recognize_mt_bounded_nd',
    'is_nice',
]
