"""
Command-Line Interface

    python run.py solve graph.col [--assume-free] [--trace] [--output c.txt]
    python run.py analyze graph.col
    python run.py clean graph.col [--output reduced.col]
    python run.py decompose graph.col
    python run.py phase2 graph.col --antihole 1,2,3,4,5,6,7
    python run.py gen -n 12 -p 0.4 --seed 7 [--preset NAME]
    python run.py difftest --corpus DIR [--report FILE] [--jobs 4]
    python run.py check-coloring graph.col c.txt

OUTPUT:
Results go to stdout in a stable line format; trace lines are DIMACS
comments ("c ..."), so the output of `solve` can be fed straight back to
`check-coloring`. Logs go to stderr.

EXIT CODES: see tetrachrome.errors.
"""
import argparse
import itertools
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from tetrachrome import __version__, config
from tetrachrome.budget import Budget
from tetrachrome.cutsets import clique_cutset_decompose
from tetrachrome.detectors import (
    antihole_verdict,
    classify_attachment,
    enumerate_antiholes,
    enumerate_cliques,
    enumerate_induced_cycles,
    enumerate_induced_paths,
)
from tetrachrome.dimacs import load_graph, read_coloring, write_coloring, write_dimacs
from tetrachrome.errors import (
    EXIT_COLORABLE,
    EXIT_NOT_COLORABLE,
    TetrachromeError,
    UsageError,
)
from tetrachrome.graph import Graph, bits, is_connected, is_proper
from tetrachrome.models import CliConfig, GenSpec
from tetrachrome.oracle import PRESETS, differential_run, generate_free, load_corpus
from tetrachrome.phase1 import clean_loop
from tetrachrome.phase2 import enumerate_states, format_tables, step6_domain
from tetrachrome.pipeline import solve
from tetrachrome.trace import TraceEvent, TraceLog
from tetrachrome.validation import (
    parse_antihole_spec,
    validate_antihole_spec,
    validate_preset,
    validate_probability,
)

log = logging.getLogger("tetrachrome.cli")


# ============================================================================
# HELPERS
# ============================================================================

def setup_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _emit(out: List[str], path: Optional[str]) -> None:
    text = "\n".join(out) + "\n" if out else ""
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _trace_to(lines: List[str]) -> TraceLog:
    trace = TraceLog()

    def collect(event: TraceEvent) -> None:
        lines.append("c " + event.format())

    trace.subscribe(collect)
    return trace


def _capped(iterable, cap: int) -> Tuple[str, Optional[List[int]]]:
    """Count up to cap (shown as "cap+" beyond it) and keep the first item."""
    first = None
    count = 0
    for item in itertools.islice(iterable, cap + 1):
        if first is None:
            first = item
        count += 1
    return (f"{cap}+" if count > cap else str(count)), first


def _ids(g: Graph, vertices: Sequence[int]) -> str:
    return ",".join(g.label(v) for v in vertices) or "-"


# ============================================================================
# SUBCOMMANDS
# ============================================================================

def cmd_solve(args: argparse.Namespace) -> int:
    g = load_graph(args.input, force=args.force)
    lines: List[str] = []
    trace = _trace_to(lines) if args.trace else None
    result = solve(g, assume_free=args.assume_free, force=args.force, trace=trace)
    if result.colorable:
        lines.append("s colorable")
        lines.extend(write_coloring(result.coloring).splitlines())
        _emit(lines, args.output)
        return EXIT_COLORABLE
    evidence = result.evidence
    lines.append("s not-colorable")
    lines.append(f"c evidence {evidence.kind} {evidence.detail}".rstrip())
    _emit(lines, args.output)
    return EXIT_NOT_COLORABLE


def cmd_analyze(args: argparse.Namespace) -> int:
    g = load_graph(args.input, force=args.force)
    cap = config.ANALYZE_CAP
    out = [f"n {g.n}", f"m {g.edge_count}"]
    sevens = enumerate_antiholes(g, 7, args.force)
    counted = [
        ("P6", enumerate_induced_paths(g, 6, args.force)),
        ("C5", enumerate_induced_cycles(g, 5, args.force)),
        ("K5", enumerate_cliques(g, 5, args.force)),
        ("antihole7", sevens),
        ("antihole9", enumerate_antiholes(g, 9, args.force)),
    ]
    for name, found in counted:
        count, first = _capped(found, cap)
        out.append(f"{name} {count}")
        out.append(f"witness {name} {_ids(g, first or [])}")
    out.append(f"connected {str(is_connected(g)).lower()}")
    for c in itertools.islice(sevens, cap):
        record = antihole_verdict(g, classify_attachment(g, c))
        line = f"verdict {_ids(g, c)} {record.verdict}"
        if record.witness:
            line += f" {_ids(g, record.witness)}"
        out.append(line)
    _emit(out, None)
    return EXIT_COLORABLE


def cmd_clean(args: argparse.Namespace) -> int:
    g = load_graph(args.input, force=args.force)
    if not is_connected(g):
        raise UsageError("clean needs a connected graph")
    lines: List[str] = []
    outcome, journal = clean_loop(g, force=args.force, trace=_trace_to(lines))
    if outcome.kind == "not_colorable":
        lines.append(f"s not-colorable {outcome.evidence.kind}")
        _emit(lines, None)
        return EXIT_NOT_COLORABLE
    lines.append(f"s clean n={outcome.graph.n} contractions={len(journal)}")
    _emit(lines, None)
    if args.output:
        comments = [f"label {v + 1} {label}" for v, label in enumerate(outcome.graph.labels)]
        Path(args.output).write_text(write_dimacs(outcome.graph, comments=comments))
    return EXIT_COLORABLE


def cmd_decompose(args: argparse.Namespace) -> int:
    g = load_graph(args.input, force=args.force)
    tree = clique_cutset_decompose(g)
    out = []
    for i, atom in enumerate(tree.atoms):
        parent = "-" if tree.parents[i] is None else str(tree.parents[i])
        atom_ids = ",".join(g.label(v) for v in bits(atom))
        sep_ids = ",".join(g.label(v) for v in bits(tree.separators[i])) or "-"
        out.append(f"atom {i} parent={parent} separator={sep_ids} vertices={atom_ids}")
    _emit(out, None)
    return EXIT_COLORABLE


def cmd_phase2(args: argparse.Namespace) -> int:
    g = load_graph(args.input, force=args.force)
    is_valid, error = validate_antihole_spec(args.antihole, g.n)
    if not is_valid:
        raise UsageError(error)
    c = parse_antihole_spec(args.antihole)
    domain = step6_domain(classify_attachment(g, c))
    out = []
    found = False
    for index, (base, state, good) in enumerate(enumerate_states(g, c)):
        colors = ",".join(str(base[v]) for v in c + bits(state.r))
        out.append(f"base {index} {colors} {'good' if good else 'fail'}")
        out.extend("  " + line for line in format_tables(g, state, domain))
        found = found or good is not None
    out.append("s good-coloring" if found else "s no-good-coloring")
    _emit(out, None)
    return EXIT_COLORABLE if found else EXIT_NOT_COLORABLE


def cmd_gen(args: argparse.Namespace) -> int:
    is_valid, error = validate_probability(args.p)
    if not is_valid:
        raise UsageError(error)
    is_valid, error = validate_preset(args.preset, PRESETS)
    if not is_valid:
        raise UsageError(error)
    try:
        spec = GenSpec(n=args.n, p=args.p, seed=args.seed, repair=args.repair, preset=args.preset)
    except ValidationError as exc:
        raise UsageError(f"invalid generator settings: {exc.errors()[0]['msg']}")
    g = generate_free(spec)
    comment = f"gen n={spec.n} p={spec.p} seed={spec.seed} repair={spec.repair} preset={spec.preset or '-'}"
    text = write_dimacs(g, comments=[comment])
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_COLORABLE


def cmd_difftest(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    budget = Budget(max_items=args.max_items, max_seconds=args.max_seconds)
    report = differential_run(corpus, budget, jobs=args.jobs)
    lines = report.lines()
    _emit(lines, args.report)
    if args.report:
        sys.stdout.write(lines[-1] + "\n")
    for entry in report.mismatches:
        if entry.reproducer and args.reproducers:
            Path(args.reproducers).mkdir(parents=True, exist_ok=True)
            (Path(args.reproducers) / entry.name).write_text(entry.reproducer)
    return EXIT_NOT_COLORABLE if report.mismatches else EXIT_COLORABLE


def cmd_check_coloring(args: argparse.Namespace) -> int:
    g = load_graph(args.input, force=args.force)
    c = read_coloring(Path(args.coloring).read_text(), g.n)
    check = is_proper(g, c, require_total=True)
    if check.ok:
        _emit(["ok"], None)
        return EXIT_COLORABLE
    if check.bad_color is not None:
        msg = f"bad color {c[check.bad_color]} at vertex {g.label(check.bad_color)}"
    elif check.edge is not None:
        u, v = check.edge
        msg = f"monochromatic edge {g.label(u)} {g.label(v)}"
    else:
        msg = f"uncolored vertex {g.label(check.uncolored)}"
    _emit([msg], None)
    return EXIT_NOT_COLORABLE


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "solve": cmd_solve,
    "analyze": cmd_analyze,
    "clean": cmd_clean,
    "decompose": cmd_decompose,
    "phase2": cmd_phase2,
    "gen": cmd_gen,
    "difftest": cmd_difftest,
    "check-coloring": cmd_check_coloring,
}


# ============================================================================
# PARSER
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tetrachrome", description="4-coloring of (P6,C5)-free graphs")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    parser.add_argument("--force", action="store_true", help="run above the desk-scale size ceiling")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide 4-colorability and print a coloring")
    p.add_argument("input")
    p.add_argument("--assume-free", action="store_true", help="skip the P6/C5 input check")
    p.add_argument("--trace", action="store_true", help="print solver events as comments")
    p.add_argument("--output", "-o")

    p = sub.add_parser("analyze", help="count forbidden and decisive substructures")
    p.add_argument("input")

    p = sub.add_parser("clean", help="run Phase I and print its steps")
    p.add_argument("input")
    p.add_argument("--output", "-o", help="write the cleaned graph as DIMACS")

    p = sub.add_parser("decompose", help="print the clique-cutset atoms")
    p.add_argument("input")

    p = sub.add_parser("phase2", help="dump Phase II tables for every base coloring")
    p.add_argument("input")
    p.add_argument("--antihole", required=True, help="seven 1-based ids in cyclic order")

    p = sub.add_parser("gen", help="generate a (P6,C5)-free graph")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--preset")
    p.add_argument("--repair", default="chord", choices=("chord", "delete", "resample"))
    p.add_argument("--output", "-o")

    p = sub.add_parser("difftest", help="compare solve against brute force over a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--report")
    p.add_argument("--reproducers", help="directory for DIMACS reproducers of mismatches")
    p.add_argument("--max-items", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("check-coloring", help="verify a coloring file")
    p.add_argument("input")
    p.add_argument("coloring")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        CliConfig(
            command=args.command,
            inputs=[getattr(args, "input", None) or getattr(args, "corpus", None) or ""],
            output=getattr(args, "output", None),
            force=args.force,
            assume_free=getattr(args, "assume_free", False),
            trace=getattr(args, "trace", False),
            seed=getattr(args, "seed", 0),
            verbosity=args.verbose,
            jobs=getattr(args, "jobs", 1),
        )
    except ValidationError as exc:
        print(f"error: {exc.errors()[0]['loc'][0]}: {exc.errors()[0]['msg']}", file=sys.stderr)
        return UsageError.exit_code
    try:
        return COMMANDS[args.command](args)
    except TetrachromeError as exc:
        log.debug("command failed", exc_info=True)
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return UsageError.exit_code
