#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Beauville Forge CLI - construct, verify and search for Beauville structures.

Usage:
    beauville verify <structure.json> [<structure.json> ...] [options]
    beauville construct --family NAME [--params P1,P2] [--reading literal|curated] [--out FILE]
    beauville search --group <group.json> [--strongly-real] [--autos <autos.json>] [--out FILE]
    beauville invariants --order N --type a,b,c,d,e,f
    beauville atlas-verify --group NAME [--gens FILE] [--hn-bracket commutator|group]
    beauville --version

Common options:
    --verbose                Enable verbose logging (timestamps, tracebacks)
    --report FILE            Write the machine-readable run report as JSON
    --json                   Print the machine-readable report instead of the summary
    --enumeration-budget N   Element budget for enumeration (or BEAUVILLE_ENUMERATION_BUDGET)

Exit codes:
    0  every verdict PASS
    2  at least one verdict FAIL
    3  no FAIL, at least one UNDETERMINED
    4  usage, file or input error

Examples:
    # Build the A5 x A5 structure and check it
    beauville construct --family mathieu_double --params A5xA5 --out a5.json
    beauville verify a5.json

    # Genera and Euler number for |G| = 3600 and type (5,6,5),(15,10,15)
    beauville invariants --order 3600 --type 5,6,5,15,10,15

    # Exhaustive search on a small group
    beauville search --group A5.json

    # A sporadic table row, generator file from BEAUVILLE_ATLAS_DIR
    beauville atlas-verify --group M12.2
"""

import argparse
import logging
import sys
from typing import List, NoReturn, Optional, Sequence

from beauville_forge._version import __version__
from beauville_forge.core.atlas import HN_BRACKETS
from beauville_forge.core.constructions import READINGS, FamilyRequest, families
from beauville_forge.core.exceptions import BeauvilleError
from beauville_forge.core.structures import StructureType
from beauville_forge.core.workspace import BeauvilleEngine, EngineConfig, RunReport, create_engine
from beauville_forge.core.workspace.runtime.engine import EXIT_USAGE
from beauville_forge.core.workspace.storage.codec import dumps, write_json

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 4 like every other input problem."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"ERROR: {message}\n")


def setup_logging(verbose: bool = False) -> None:
    """Configure logging based on verbosity level."""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format='%(message)s' if not verbose else '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )


def build_config(args: argparse.Namespace) -> EngineConfig:
    cfg = EngineConfig()
    if args.enumeration_budget is not None:
        cfg.enumeration_budget = args.enumeration_budget
    if getattr(args, "progress", False):
        cfg.progress = True
    return cfg


def cmd_verify(engine: BeauvilleEngine, args: argparse.Namespace, report: RunReport) -> None:
    for path in args.structures:
        report.add(engine.verify_file(path=path))


def cmd_construct(engine: BeauvilleEngine, args: argparse.Namespace, report: RunReport) -> None:
    request = FamilyRequest.parse(args.family, args.params or "", args.reading)
    c = engine.construct(request=request, strict=args.strict)
    report.add(engine.construction_item(c))
    if args.out:
        engine.save_construction(c, path=args.out)


def cmd_search(engine: BeauvilleEngine, args: argparse.Namespace, report: RunReport) -> None:
    if args.autos and not args.strongly_real:
        raise UsageError("--autos requires --strongly-real")
    item = report.add(engine.search_file(path=args.group, strongly_real=args.strongly_real, autos_path=args.autos))
    if args.out and "structure" in item.details:
        write_json(args.out, item.details["structure"])
        logger.info(f"Saved {args.out}")


def cmd_invariants(engine: BeauvilleEngine, args: argparse.Namespace, report: RunReport) -> None:
    try:
        t = StructureType.parse(args.type)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.order < 1:
        raise UsageError("--order must be positive")
    report.add(engine.invariants_item(order=args.order, type=t))


def cmd_atlas_verify(engine: BeauvilleEngine, args: argparse.Namespace, report: RunReport) -> None:
    outcome = engine.atlas_verify(name=args.group, path=args.gens, hn_bracket=args.hn_bracket)
    report.add(engine.atlas_item(outcome))


COMMANDS = {
    "verify": cmd_verify,
    "construct": cmd_construct,
    "search": cmd_search,
    "invariants": cmd_invariants,
    "atlas-verify": cmd_atlas_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='beauville',
        description='Beauville Forge - constructions, verification and search for Beauville structures',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')

    subparsers = parser.add_subparsers(dest='command', help='Command to execute', parser_class=_Parser)

    # Common arguments for all commands
    common_args = argparse.ArgumentParser(add_help=False)
    common_args.add_argument('--verbose', action='store_true', help='Enable verbose logging')
    common_args.add_argument('--report', help='Write the JSON run report to this path')
    common_args.add_argument('--json', action='store_true', help='Print the JSON run report to stdout')
    common_args.add_argument(
        '--enumeration-budget',
        type=int,
        default=None,
        help='Element budget for enumeration (default: BEAUVILLE_ENUMERATION_BUDGET or 1000000)'
    )

    p_verify = subparsers.add_parser('verify', parents=[common_args], help='Verify structure files')
    p_verify.add_argument('structures', nargs='+', help='Structure JSON files')

    p_construct = subparsers.add_parser('construct', parents=[common_args], help='Build a family instance')
    p_construct.add_argument('--family', required=True, choices=families(), help='Family name')
    p_construct.add_argument('--params', default='', help="Comma-separated parameters, e.g. '11,2' or 'A5xA5'")
    p_construct.add_argument('--reading', default='literal', choices=READINGS, help='Formula reading (default: literal)')
    p_construct.add_argument('--strict', action='store_true', help='Fail with exit 4 on any discrepancy')
    p_construct.add_argument('--out', help='Write the structure file here')

    p_search = subparsers.add_parser('search', parents=[common_args], help='Exhaustive search on a group')
    p_search.add_argument('--group', required=True, help='Group (or structure) JSON file')
    p_search.add_argument('--strongly-real', action='store_true', help='Search for a strongly real structure')
    p_search.add_argument('--autos', help='JSON file of candidate automorphisms')
    p_search.add_argument('--progress', action='store_true', help='Show progress bars')
    p_search.add_argument('--out', help='Write the structure found here')

    p_inv = subparsers.add_parser('invariants', parents=[common_args], help='Genera and Euler number')
    p_inv.add_argument('--order', required=True, type=int, help='Group order |G|')
    p_inv.add_argument('--type', required=True, help='Six orders a,b,c,d,e,f')

    p_atlas = subparsers.add_parser('atlas-verify', parents=[common_args], help='Check a sporadic table row')
    p_atlas.add_argument('--group', required=True, help="Group name, e.g. 'M12.2' or 'HS:2'")
    p_atlas.add_argument('--gens', help='Standard generator file (default: BEAUVILLE_ATLAS_DIR/<group>.txt)')
    p_atlas.add_argument('--hn-bracket', choices=HN_BRACKETS, help='Reading of the HN:2 bracket')

    return parser


def execute(args: argparse.Namespace, argv: Sequence[str], engine: Optional[BeauvilleEngine] = None) -> RunReport:
    """Execute one parsed subcommand and return its report."""
    setup_logging(args.verbose)
    engine = engine or create_engine(config=build_config(args))
    report = RunReport(command=list(argv))
    COMMANDS[args.command](engine, args, report)
    if args.report:
        engine.save_report(report, path=args.report)
    return report


def run(argv: Sequence[str], engine: Optional[BeauvilleEngine] = None) -> RunReport:
    """
    Parse ``argv``, execute one subcommand and return its report.

    Raises:
        SystemExit: usage errors (code 4), ``--help`` and ``--version`` (code 0).
        UsageError: inconsistent options found after parsing.
        BeauvilleError: file, construction or input errors.
    """
    parser = build_parser()
    args = parser.parse_args(list(argv))
    if not args.command:
        parser.print_help()
        parser.exit(EXIT_USAGE)
    return execute(args, argv, engine)


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the exit code."""
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        report = execute(args, argv)
    except (BeauvilleError, UsageError, ValueError, OSError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_USAGE

    if args.json:
        sys.stdout.write(dumps(report.as_dict()))
    else:
        print(report.summary())
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
