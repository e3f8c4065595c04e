"""CLI entry point: cyclic subgroup graphs, edge counts, theorem checks and scans."""

import argparse
import dataclasses
import logging
import sys
from pathlib import Path

from src.errors import GroupTheoryError, LatticeInvariantError
from src.generators import (
    dumps, error_document, generate_bijection_report, generate_cyclic_graph_dot,
    generate_group_report, generate_scan_report, generate_theorem_report,
    report_document, scan_document, theorem_document,
)
from src.groups import parse_group_spec
from src.harness import build_group_from_spec, build_report, run_bijection, scan, summarize, verify_theorem
from src.lattice import cyclic_poset
from src.models import Verdict
from src.utils.settings import HarnessSettings, load_settings

logger = logging.getLogger("cyclic_graph")

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_DISCOVERY = 2
EXIT_INTERNAL_FAULT = 3

QUIET_COMMANDS = {"dot", "json"}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        level = logging.DEBUG
    elif args.command in QUIET_COMMANDS:
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    settings = _settings_from_args(args)

    try:
        return args.handler(args, settings)
    except (GroupTheoryError, FileNotFoundError) as e:
        if args.command == "json":
            _emit(dumps(error_document(e), settings.json_indent), args.output)
        else:
            print(f"Error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except LatticeInvariantError as e:
        print(f"Internal check failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL_FAULT


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_report(args: argparse.Namespace, settings: HarnessSettings) -> int:
    report = build_report(parse_group_spec(args.spec), settings)
    _emit(generate_group_report(report), args.output)
    return EXIT_OK if report.agreement else EXIT_DISCOVERY


def _cmd_verify(args: argparse.Namespace, settings: HarnessSettings) -> int:
    report = verify_theorem(args.n, settings)
    _emit(generate_theorem_report(report), args.output)
    return _theorem_status(report.verdict, report.violations)


def _cmd_scan(args: argparse.Namespace, settings: HarnessSettings) -> int:
    findings = scan(args.max, _parity(args), settings)
    summary = summarize(findings)
    _emit(generate_scan_report(findings, summary), args.output)
    logger.info(f"Scan finished: {summary}")
    return max((_theorem_status(f.verdict, f.violations) for f in findings), default=EXIT_OK)


def _cmd_dot(args: argparse.Namespace, settings: HarnessSettings) -> int:
    spec = parse_group_spec(args.spec)
    poset = cyclic_poset(build_group_from_spec(spec, settings))
    _emit(generate_cyclic_graph_dot(poset, spec.label), args.output)
    return EXIT_OK


def _cmd_bijection(args: argparse.Namespace, settings: HarnessSettings) -> int:
    spec = parse_group_spec(args.spec)
    run = run_bijection(spec, settings)
    _emit(generate_bijection_report(spec.label, run), args.output)
    if not run.feasible or not run.verdict.valid or run.dominance_violation is not None:
        return EXIT_DISCOVERY
    return EXIT_OK


def _cmd_json(args: argparse.Namespace, settings: HarnessSettings) -> int:
    if args.scan:
        findings = scan(args.max, _parity(args), settings)
        document = scan_document(findings)
        status = max((_theorem_status(f.verdict, f.violations) for f in findings), default=EXIT_OK)
    elif args.verify is not None:
        report = verify_theorem(args.verify, settings)
        document = theorem_document(report)
        status = _theorem_status(report.verdict, report.violations)
    elif args.spec:
        report = build_report(parse_group_spec(args.spec), settings)
        document = report_document(report)
        status = EXIT_OK if report.agreement else EXIT_DISCOVERY
    else:
        raise GroupTheoryError("json needs a group spec, --scan or --verify N")

    _emit(dumps(document, settings.json_indent), args.output)
    return status


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _theorem_status(verdict: Verdict, violations: list[str]) -> int:
    if verdict is Verdict.MINIMUM_BELOW_CYCLIC or violations:
        return EXIT_DISCOVERY
    return EXIT_OK


def _parity(args: argparse.Namespace) -> str:
    if args.odd_only:
        return "odd"
    if args.even_only:
        return "even"
    return "all"


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {output}")


def _settings_from_args(args: argparse.Namespace) -> HarnessSettings:
    settings = load_settings(args.config)
    overrides = {}
    if args.closure_bound is not None:
        overrides["closure_bound"] = args.closure_bound
    if args.skip_assoc_check:
        overrides["check_associativity"] = False
    if args.workers is not None:
        overrides["scan_workers"] = args.workers
    return dataclasses.replace(settings, **overrides)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-o", "--output",
        type=Path,
        help="Write output to this file instead of stdout",
    )
    common.add_argument(
        "--skip-assoc-check",
        action="store_true",
        help="Trust Cayley files and skip the O(n^3) associativity scan",
    )
    common.add_argument(
        "--closure-bound",
        type=int,
        help="Maximum group order for permutation closures and products (default: 20000)",
    )
    common.add_argument(
        "--workers",
        type=int,
        help="Threads used by scans (default: 4)",
    )
    common.add_argument(
        "--config",
        type=Path,
        help="JSON settings file (default: ./.cyclic_graph.json if present)",
    )
    common.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Enable verbose logging",
    )

    parser = argparse.ArgumentParser(
        description="Build cyclic subgroup graphs of finite groups and check edge-count bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    spec_help = 'Group spec: Z12, D6, Dic3, Q8, S4, A5, Ab[6,2], SD[7,3,2], Z3xZ3, @file.cayley, @file.perms'

    p = sub.add_parser("report", parents=[common], help="Order histogram and edge counts for one group")
    p.add_argument("spec", help=spec_help)
    p.set_defaults(handler=_cmd_report)

    p = sub.add_parser("verify", parents=[common], help="Compare all catalog groups of order n with Z_n")
    p.add_argument("n", type=int, help="Group order (1..200)")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="Run verify for every order up to --max")
    p.add_argument("--max", type=int, required=True, help="Largest order to scan (<= 200)")
    _add_parity(p)
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser("dot", parents=[common], help="Emit the cyclic subgroup graph as DOT")
    p.add_argument("spec", help=spec_help)
    p.set_defaults(handler=_cmd_dot)

    p = sub.add_parser("bijection", parents=[common], help="Find and verify an order-divisibility bijection to Z_n")
    p.add_argument("spec", help=spec_help)
    p.set_defaults(handler=_cmd_bijection)

    p = sub.add_parser("json", parents=[common], help="JSON mirror of report, verify or scan")
    p.add_argument("spec", nargs="?", help=spec_help)
    p.add_argument("--scan", action="store_true", help="Emit scan findings instead of a group report")
    p.add_argument("--verify", type=int, metavar="N", help="Emit the theorem report for order N")
    p.add_argument("--max", type=int, default=15, help="Largest order for --scan (default: 15)")
    _add_parity(p)
    p.set_defaults(handler=_cmd_json)

    return parser


def _add_parity(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--odd-only", action="store_true", help="Only odd orders")
    group.add_argument("--even-only", action="store_true", help="Only even orders")


if __name__ == "__main__":
    sys.exit(main())
