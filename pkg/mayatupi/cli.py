"""
Command-line front end.

    mayatupi recognize [FILE] [--mode MODE] [--json] [--four]
    mayatupi verify GRAPH CERTIFICATE [--class CLASS]
    mayatupi enumerate --class mt --max-n 7 [--restrict chordal] [--out DIR]
    mayatupi catalog NAME [--out DIR]

Exit codes: 0 member / accepted, 1 non-member / rejected, 2 input error,
3 undecided (budget, cap or promise).
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__, config
from .catalog import CATALOG_NAMES, get_catalog
from .certificates import (
    GRAPH_CLASSES, NO, UNDECIDED, YES, MTPartition, NoCertificate, RecognitionResult, document_class, from_document,
    to_document, two_part_to_four, undecided, verify_certificate,
)
from .enumeration import FILTERS, count_table, disconnected_minimal_obstructions, find_minimal_obstructions
from .errors import CertificateError, GraphFormatError, MayaTupiError, PromiseViolation
from .graph import read_graph, write_graph6
from .mt import MODES, recognize

logger = logging.getLogger(__name__)

EXIT_MEMBER = 0
EXIT_NON_MEMBER = 1
EXIT_INPUT = 2
EXIT_UNDECIDED = 3

_EXIT_FOR_VERDICT = {YES: EXIT_MEMBER, NO: EXIT_NON_MEMBER, UNDECIDED: EXIT_UNDECIDED}

# enumeration orders above this need --extended
DEFAULT_ENUM_MAX = 8


def _read_text(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e.strerror}") from None


def _report(result: RecognitionResult) -> str:
    lines = [f"verdict: {result.verdict}" + (f" (route {result.route})" if result.route else '')]
    c = result.certificate
    if isinstance(c, NoCertificate):
        lines.append(f"{c.kind}: {c.obstruction_id} on {list(c.witness)}")
    elif c is not None:
        lines += [f"{name}: {sorted(part)}" for name, part in c.parts().items()]
    if result.flags:
        lines.append(f"flags: {', '.join(sorted(result.flags))}")
    return '\n'.join(lines)


def _emit(result: RecognitionResult, as_json: bool):
    if as_json:
        print(json.dumps(to_document(result), indent=2))
    else:
        print(_report(result))


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_recognize(args) -> int:
    g = read_graph(_read_text(args.graph), args.format)
    logger.debug(f"read {g!r}")
    try:
        result = recognize(g, args.mode)
    except PromiseViolation as e:
        logger.warning(str(e))
        _emit(undecided(args.mode, certificate=e.certificate), args.json)
        return EXIT_UNDECIDED
    if args.four and result.verdict == YES and isinstance(result.certificate, MTPartition):
        result = RecognitionResult(result.verdict, two_part_to_four(g, result.certificate), result.flags, result.route)
    _emit(result, args.json)
    return _EXIT_FOR_VERDICT[result.verdict]


def cmd_verify(args) -> int:
    g = read_graph(_read_text(args.graph), args.format)
    try:
        doc = json.loads(_read_text(args.certificate))
    except json.JSONDecodeError as e:
        raise CertificateError(f"certificate is not JSON: {e.msg} at line {e.lineno}") from None
    cert = from_document(doc)
    if cert is None:
        raise CertificateError("certificate of kind 'none' has nothing to verify")
    graph_class = args.cls or document_class(doc) or 'mt'
    logger.debug(f"verifying against class {graph_class}")
    verdict = verify_certificate(g, cert, graph_class=graph_class)
    print(verdict)
    return EXIT_MEMBER if verdict else EXIT_NON_MEMBER


def cmd_enumerate(args) -> int:
    if args.max_n > DEFAULT_ENUM_MAX and not args.extended:
        raise MayaTupiError(f"--max-n {args.max_n} is above {DEFAULT_ENUM_MAX}; pass --extended for long runs")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.disconnected:
        label = 'mt-disconnected'
        cat = disconnected_minimal_obstructions(args.max_n, args.workers)
    else:
        label = args.cls if args.restrict == 'none' else f"{args.cls}-{args.restrict}"
        checkpoint = out / f"{label}.checkpoint.json" if args.extended else None
        cat = find_minimal_obstructions(args.max_n, args.cls, args.restrict, args.workers, checkpoint)
    names = cat.sorted_names()
    (out / f"{label}.g6").write_text(''.join(write_graph6(cat[name]) + '\n' for name in names))
    table = count_table(cat, args.max_n)
    (out / f"{label}.tsv").write_text('order\tcount\n' + ''.join(f"{n}\t{c}\n" for n, c in table))
    print(f"{label}: {len(cat)} minimal obstructions up to order {args.max_n}")
    for name in names:
        print(f"  {name}\t{cat[name].order}")
    return EXIT_MEMBER


def cmd_catalog(args) -> int:
    cat = get_catalog(args.name)
    text = ''.join(write_graph6(cat[name]) + '\n' for name in cat.sorted_names())
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{args.name}.g6").write_text(text)
        logger.info(f"wrote {len(cat)} graphs to {out / f'{args.name}.g6'}")
    else:
        sys.stdout.write(text)
    return EXIT_MEMBER


# ============================================================================
# PARSER
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='mayatupi', description='Certifying recognition of Maya-Tupi graphs')
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    parser.add_argument('--oracle-cap', type=int, help='largest order handed to the brute-force oracle')
    parser.add_argument('--workers', type=int, help='worker processes for enumeration')
    parser.add_argument('--budget', type=int, help='profile search budget (assemblies)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('recognize', help='decide MT membership with a certificate')
    p.add_argument('graph', nargs='?', default='-', help="graph file, or '-' for stdin")
    p.add_argument('--mode', choices=MODES, default='auto')
    p.add_argument('--format', choices=('auto', 'g6', 'edges'), default='auto')
    p.add_argument('--json', action='store_true', help='print the certificate document')
    p.add_argument('--four', action='store_true', help='report yes-partitions as (K, Mbar, S, M)')
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser('verify', help='check a certificate against a graph')
    p.add_argument('graph')
    p.add_argument('certificate')
    p.add_argument('--class', dest='cls', choices=GRAPH_CLASSES, default=None,
                   help="class a no-certificate claims non-membership of (default: the document's, else mt)")
    p.add_argument('--format', choices=('auto', 'g6', 'edges'), default='auto')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('enumerate', help='search minimal obstructions among small graphs')
    p.add_argument('--class', dest='cls', choices=GRAPH_CLASSES, default='mt')
    p.add_argument('--max-n', type=int, required=True)
    p.add_argument('--restrict', choices=tuple(FILTERS), default='none')
    p.add_argument('--disconnected', action='store_true', help='compose disconnected MT obstructions')
    p.add_argument('--extended', action='store_true', help='allow orders above 8, with a checkpoint file')
    p.add_argument('--out', default=None, help='output directory (default: MT_CATALOG_DIR)')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('catalog', help='dump a built-in catalog as graph6')
    p.add_argument('name', choices=CATALOG_NAMES)
    p.add_argument('--out', default=None)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_MEMBER
    level = config.settings.log_level
    if args.verbose:
        level = 'DEBUG'
    logging.basicConfig(level=getattr(logging, level, logging.INFO), format='[MT] %(message)s')
    config.settings = config.settings.override(
        oracle_cap=args.oracle_cap, workers=args.workers, profile_budget=args.budget)
    if args.command == 'enumerate' and args.out is None:
        args.out = config.settings.catalog_dir
    try:
        return args.func(args)
    except MayaTupiError as e:
        logger.error(str(e))
        return e.exit_code
