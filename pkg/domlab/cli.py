# ----------------------------------------------------------
# Domination Lab
# File: domlab/cli.py
# ----------------------------------------------------------
# Description:
# Command-line entry point: `domlab build | analyze | solve | verify | scan`.
#
# Features:
#  • argparse subcommands with a dynamic help epilog (Decorator Pattern)
#  • Color-coded outputs (using colorama, plain fallback)
#  • JSON results on stdout or in report files
#  • Exit codes: 0 all pass, 1 any fail, 2 any inconclusive, 3 usage/IO error
# ----------------------------------------------------------

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from domlab.analysis import CHECKS, analyze
from domlab.certification import certified_gamma, load_occurrences
from domlab.domination import SolveStatus, solve
from domlab.exceptions import DomlabError
from domlab.families import build_family, list_base_graphs
from domlab.graph6 import read_graph6_file, write_graph6
from domlab.graph_core import Graph, to_dot
from domlab.help_decorator import build_epilog
from domlab.input_validators import ensure_budget, ensure_int, parse_csv_list
from domlab.lab_config import LabConfig
from domlab.logger import Logger
from domlab.records import SCAN_FIELDS
from domlab.reporting import FORMATS, emit_records
from domlab.scanner import CONJECTURES, scan_corpus
from domlab.verifier import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, Verifier


# ----------------------------------------------------------
# Optional Color Support Setup
# ----------------------------------------------------------
def _load_colorama():
    """Safely import colorama for colored terminal output."""
    try:
        from colorama import init, Fore, Style
        init(autoreset=True)
        return Fore, Style
    except ImportError:
        return None, None


Fore, Style = _load_colorama()

_STATUS_COLORS = {"pass": "green", "holds": "green", "fail": "red", "violated": "red",
                  "inconclusive": "yellow"}


def cprint(text: str, color: str = "white", stream=None) -> None:
    """Print text with color when available, fallback to plain output."""
    stream = stream or sys.stdout
    if Fore and Style:
        palette = {
            "green": Fore.GREEN,
            "red": Fore.RED,
            "yellow": Fore.YELLOW,
            "cyan": Fore.CYAN,
            "white": Fore.WHITE,
        }
        print(palette.get(color, Fore.WHITE) + text + Style.RESET_ALL, file=stream)
    else:
        print(text, file=stream)


class UsageError(DomlabError):
    """Command-line usage error (exit code 3)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


# ----------------------------------------------------------
# Helpers
# ----------------------------------------------------------
def _read_graphs(path: str, encoding: str) -> List[Graph]:
    if not Path(path).is_file():
        raise UsageError(f"Input file not found: {path}")
    graphs = []
    for line in read_graph6_file(path, encoding):
        if line.error is not None:
            raise UsageError(f"{path}:{line.line_number}: {line.error}")
        graphs.append(line.graph)
    if not graphs:
        raise UsageError(f"No graphs in {path}")
    return graphs


def _write_json(data: Any, out: Optional[str]) -> None:
    text = json.dumps(data, indent=2)
    if out:
        target = Path(out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text + "\n", encoding="utf-8")
        cprint(f"Wrote {target}", "cyan")
    else:
        print(text)


# ----------------------------------------------------------
# Subcommands
# ----------------------------------------------------------
def cmd_build(args: argparse.Namespace, config: LabConfig) -> int:
    params = {name: getattr(args, name) for name in ("k", "r", "i", "n", "j", "base")
              if getattr(args, name) is not None}
    construction = build_family(args.family, **params)
    g = construction.graph
    if args.format == "dot":
        text = to_dot(g, construction.dot_labels())
    else:
        text = write_graph6(g) + "\n"
    target = Path(args.out)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="ascii" if args.format == "g6" else config.default_encoding)
    cprint(f"{construction.name}: v={g.n}, e={g.m} -> {target}", "green")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace, config: LabConfig) -> int:
    checks = parse_csv_list(args.checks, list(CHECKS), "checks") if args.checks else list(CHECKS)
    time_limit = ensure_budget(args.budget) if args.budget is not None else None
    results = []
    undecided = False
    for g in _read_graphs(args.input, config.default_encoding):
        report = analyze(g, checks, config.hamilton_budget, time_limit)
        if report.hamiltonian is not None and report.hamiltonian.hamiltonian is None:
            undecided = True
        results.append(report.to_dict(g))
    _write_json(results, args.report)
    return EXIT_INCONCLUSIVE if undecided else EXIT_OK


def cmd_solve(args: argparse.Namespace, config: LabConfig) -> int:
    budget = ensure_budget(args.budget) if args.budget is not None else config.claim_budget
    graphs = _read_graphs(args.input, config.default_encoding)
    if args.certify and len(graphs) != 1:
        raise UsageError("--certify needs an input file with exactly one graph")
    results = []
    for g in graphs:
        if args.certify:
            occs = load_occurrences(args.certify, config.default_encoding)
            result = certified_gamma(g, occs, budget)
        else:
            result = solve(g, budget, args.method, config.bruteforce_cap)
        color = "green" if result.optimal else "yellow"
        cprint(f"n={g.n} gamma={result.gamma} [{result.certificate.value}, {result.status.value}]",
               color, sys.stderr)
        results.append(result.to_dict())
    _write_json(results, args.report)
    if any(r["status"] != SolveStatus.OPTIMAL.value for r in results):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: LabConfig) -> int:
    if args.workers is not None:
        config.workers = ensure_int(args.workers, "workers", minimum=1)
    budget = ensure_budget(args.budget) if args.budget is not None else None
    verifier = Verifier(config, args.report or config.report_file, args.format)
    cprint(f"Verifying claims: {args.claims}", "cyan")
    reports = verifier.run(args.claims, budget)
    for report in reports:
        cprint(f"  {report}", _STATUS_COLORS.get(report.status.value, "white"))
    path = verifier.save_report()
    counts = verifier.report_log.counts()
    cprint(f"{counts['pass']} pass, {counts['fail']} fail, "
           f"{counts['inconclusive']} inconclusive -> {path}", "cyan")
    return verifier.exit_code()


def cmd_scan(args: argparse.Namespace, config: LabConfig) -> int:
    kappa_min = ensure_int(args.kappa_min, "kappa-min", minimum=0) if args.kappa_min is not None else None
    budget = ensure_budget(args.budget) if args.budget is not None else config.claim_budget
    result = scan_corpus(args.input, args.conjecture, kappa_min, not args.any_degree, budget)
    for record in result.violations:
        cprint(f"  violation line {record.line_number}: {record.graph6} "
               f"gamma={record.gamma} > {record.bound}", "red")
    if args.report:
        emit_records([r.to_dict() for r in result.records], args.format, args.report,
                     SCAN_FIELDS, config.default_encoding)
    summary = result.summary
    color = "red" if summary.violated else ("yellow" if summary.inconclusive else "green")
    cprint(f"Scan summary: {json.dumps(summary.to_dict())}", color)
    if summary.violated:
        return EXIT_FAIL
    if summary.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ----------------------------------------------------------
# Parser
# ----------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="domlab",
        description="Build, analyze and verify cubic graphs with large domination number.",
        epilog=build_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    build = sub.add_parser("build", help="build a gadget or family")
    build.add_argument("--family", required=True)
    for name in ("k", "r", "i", "n", "j"):
        build.add_argument(f"--{name}", type=int)
    build.add_argument("--base", help=f"{', '.join(list_base_graphs())} or graph6 text")
    build.add_argument("--out", required=True)
    build.add_argument("--format", choices=("g6", "dot"), default="g6")

    analyze_p = sub.add_parser("analyze", help="structural checks")
    analyze_p.add_argument("--in", dest="input", required=True)
    analyze_p.add_argument("--checks", default=",".join(CHECKS))
    analyze_p.add_argument("--budget", type=float, help="seconds for the Hamiltonian search")
    analyze_p.add_argument("--report")

    solve_p = sub.add_parser("solve", help="domination number")
    solve_p.add_argument("--in", dest="input", required=True)
    solve_p.add_argument("--budget", type=float)
    solve_p.add_argument("--certify", help="JSON occurrence sidecar")
    solve_p.add_argument("--method", choices=("exact", "bruteforce"), default="exact")
    solve_p.add_argument("--report")

    verify = sub.add_parser("verify", help="run the claim registry")
    verify.add_argument("--claims", default="all", help="all, stretch or ID,ID,...")
    verify.add_argument("--budget", type=float, help="seconds per claim")
    verify.add_argument("--workers", type=int)
    verify.add_argument("--report")
    verify.add_argument("--format", choices=FORMATS, default="json")

    scan = sub.add_parser("scan", help="check a graph6 corpus")
    scan.add_argument("--in", dest="input", required=True)
    scan.add_argument("--conjecture", choices=CONJECTURES, default="kelmans")
    scan.add_argument("--kappa-min", dest="kappa_min", type=int)
    scan.add_argument("--any-degree", action="store_true", help="do not require cubic graphs")
    scan.add_argument("--budget", type=float, help="seconds per graph")
    scan.add_argument("--report", required=True)
    scan.add_argument("--format", choices=FORMATS, default="json")
    return parser


_COMMANDS = {
    "build": cmd_build,
    "analyze": cmd_analyze,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv: Optional[Sequence[str]] = None, config: Optional[LabConfig] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            cprint(build_parser().format_help(), "white")
            return EXIT_USAGE
        config = config or LabConfig()
        config.validate()
        Logger(config)
        return _COMMANDS[args.command](args, config)
    except (DomlabError, OSError) as e:
        logging.error(f"domlab failed: {e}")
        cprint(f"Error: {e}", "red", sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        cprint("Interrupted.", "yellow", sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
