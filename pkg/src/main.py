"""
Command-line entry point.

    check  family|graph <file>
    solve  family|graph <file> [--seed S] [--max-resamples K] [--exact]
    verify family <file> --assignment <file>
    verify graph  <file> --matching <file> [--saturate-a]
    gen    family --n N --l L --m M --universe U [--seed S]
    gen    plane --q Q
    gen    theorem3 --q Q --n N
    bench  --trials T --n N --l L --m M --universe U [--seed S] [--workers W]

Exit codes: 0 when the verdict is holds/found/valid, 1 when it is
fails/not found/exhausted/invalid, 2 on input or usage errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from src.bench import run_benchmark
from src.config import get_settings
from src.families import (
    family_stats,
    matching_from_transversal,
    neighbor_family,
    validate_matching,
    validate_transversal,
)
from src.generators import gen_family, gen_plane_incidence, gen_theorem3_instance
from src.graph_tools import check_theorem3
from src.lll import check_theorem2
from src.logging_config import LogContext, get_logger, setup_logging
from src.models import PlaneOrder, TransversalError
from src.oracle import has_transversal_exact, hall_violating_subfamily, max_matching, transversal_deficiency
from src.parser import (
    format_report,
    parse_assignment,
    parse_family,
    parse_graph,
    parse_matching,
    serialize_family,
    serialize_graph,
    serialize_matching,
    serialize_transversal,
)
from src.solver import find_transversal_mt

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

CommandResult = Tuple[str, int]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transversal",
        description="Check, construct and verify transversals of set families "
        "and saturating matchings of bipartite graphs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s check family disjoint.fam
  %(prog)s solve graph fano.bg --exact
  %(prog)s gen family --n 20 --l 11 --m 1 --universe 400 --seed 7
  %(prog)s bench --trials 500 --n 20 --l 11 --m 1 --universe 400
        """,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Evaluate the sufficient condition")
    check.add_argument("kind", choices=["family", "graph"])
    check.add_argument("file")

    solve = commands.add_parser("solve", help="Construct a transversal or saturating matching")
    solve.add_argument("kind", choices=["family", "graph"])
    solve.add_argument("file")
    solve.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    solve.add_argument("--max-resamples", type=int, default=None, help="Resample cap (default: 10000 + 100 n^2)")
    solve.add_argument("--exact", action="store_true", help="Use maximum matching instead of resampling")

    verify = commands.add_parser("verify", help="Validate a transversal or matching")
    verify.add_argument("kind", choices=["family", "graph"])
    verify.add_argument("file")
    verify.add_argument("--assignment", help="Transversal file (family only)")
    verify.add_argument("--matching", help="Matching file (graph only)")
    verify.add_argument("--saturate-a", action="store_true", help="Require the matching to cover A")

    gen = commands.add_parser("gen", help="Generate an instance")
    gen.add_argument("kind", choices=["family", "plane", "theorem3"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--l", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--universe", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--seed", type=int, default=0)

    bench = commands.add_parser("bench", help="Run seeded solver trials")
    bench.add_argument("--trials", type=int, required=True)
    bench.add_argument("--n", type=int, required=True)
    bench.add_argument("--l", type=int, required=True)
    bench.add_argument("--m", type=int, required=True)
    bench.add_argument("--universe", type=int, required=True)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--max-resamples", type=int, default=None)
    bench.add_argument("--workers", type=int, default=None, help="Worker processes (default: TRANSVERSAL_BENCH_WORKERS)")

    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse arguments and enforce the per-kind required options."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        if args.kind == "family" and not args.assignment:
            parser.error("verify family requires --assignment")
        if args.kind == "graph" and not args.matching:
            parser.error("verify graph requires --matching")
    if args.command == "gen":
        needed = {"family": ("n", "l", "m", "universe"), "plane": ("q",), "theorem3": ("q", "n")}
        missing = [name for name in needed[args.kind] if getattr(args, name) is None]
        if missing:
            parser.error(f"gen {args.kind} requires " + ", ".join(f"--{name}" for name in missing))
    return args


def _read(path: str) -> str:
    return Path(path).read_text(encoding="ascii")


# ============================================================================
# Command handlers
# ============================================================================

def run_check(args: argparse.Namespace) -> CommandResult:
    if args.kind == "family":
        family = parse_family(_read(args.file))
        stats = family_stats(family)
        fields = [
            ("command", "check family"),
            ("n", stats.n),
            ("l", stats.l),
            ("m", stats.m),
            ("empty_set", stats.has_empty_set),
        ]
        if stats.has_empty_set:
            fields += [("empty_index", stats.first_empty_index), ("theorem2", "fails")]
            return format_report(fields), EXIT_NEGATIVE
        report = check_theorem2(stats)
        fields += [
            ("theorem2_lhs", report.lhs),
            ("theorem2_rhs", report.rhs),
            ("theorem2_margin", report.margin),
            ("theorem2", "holds" if report.holds else "fails"),
        ]
        return format_report(fields), EXIT_OK if report.holds else EXIT_NEGATIVE

    graph = parse_graph(_read(args.file))
    report = check_theorem3(graph)
    fields = [
        ("command", "check graph"),
        ("size_a", graph.size_a),
        ("size_b", graph.size_b),
        ("edges", len(graph.edges)),
        ("c4_free", report.c4.free),
        ("c4_witness", report.c4.witness.as_tuple() if report.c4.witness else None),
        ("degree_threshold", report.degree.inputs["threshold"]),
        ("min_degree", report.degree.inputs["min_degree"]),
        ("deficient_vertices", report.deficient_vertices),
        ("theorem3", "holds" if report.holds else "fails"),
    ]
    return format_report(fields), EXIT_OK if report.holds else EXIT_NEGATIVE


def _solve_family(args: argparse.Namespace) -> CommandResult:
    family = parse_family(_read(args.file))
    if args.exact:
        result = has_transversal_exact(family)
        fields = [("command", "solve family"), ("method", "exact"), ("n", family.n)]
        if result.exists:
            fields.append(("outcome", "found"))
            return format_report(fields, serialize_transversal(result.transversal)), EXIT_OK
        fields.append(("deficiency", transversal_deficiency(family)))
        if family.n <= get_settings().hall_max_n:
            fields.append(("hall_witness", hall_violating_subfamily(family)))
        fields.append(("outcome", "not found"))
        return format_report(fields), EXIT_NEGATIVE

    empty_index = family_stats(family).first_empty_index
    if empty_index is not None:
        fields = [
            ("command", "solve family"),
            ("method", "resampling"),
            ("n", family.n),
            ("empty_index", empty_index),
            ("outcome", "not found"),
        ]
        return format_report(fields), EXIT_NEGATIVE

    outcome = find_transversal_mt(family, seed=args.seed, rounds_cap=args.max_resamples)
    fields = [
        ("command", "solve family"),
        ("method", "resampling"),
        ("n", family.n),
        ("seed", outcome.seed),
        ("max_resamples", outcome.rounds_cap),
        ("resamples", outcome.resample_count),
        ("outcome", "found" if outcome.found else "exhausted"),
    ]
    if outcome.found:
        return format_report(fields, serialize_transversal(outcome.transversal)), EXIT_OK
    return format_report(fields), EXIT_NEGATIVE


def _solve_graph(args: argparse.Namespace) -> CommandResult:
    graph = parse_graph(_read(args.file))
    fields = [("command", "solve graph"), ("size_a", graph.size_a)]
    if args.exact:
        matching = max_matching(graph)
        saturates = len(matching) == graph.size_a
        fields += [
            ("method", "exact"),
            ("matching_size", len(matching)),
            ("outcome", "found" if saturates else "not found"),
        ]
        return format_report(fields, serialize_matching(matching)), EXIT_OK if saturates else EXIT_NEGATIVE

    isolated = next((a for a, row in enumerate(graph.adjacency_a) if not row), None)
    if isolated is not None:
        fields += [("method", "resampling"), ("isolated_vertex", isolated), ("outcome", "not found")]
        return format_report(fields), EXIT_NEGATIVE

    outcome = find_transversal_mt(neighbor_family(graph), seed=args.seed, rounds_cap=args.max_resamples)
    fields += [
        ("method", "resampling"),
        ("seed", outcome.seed),
        ("max_resamples", outcome.rounds_cap),
        ("resamples", outcome.resample_count),
    ]
    if outcome.exhausted:
        fields.append(("outcome", "exhausted"))
        return format_report(fields), EXIT_NEGATIVE
    matching = matching_from_transversal(graph, outcome.transversal)
    fields += [("matching_size", len(matching)), ("outcome", "found")]
    return format_report(fields, serialize_matching(matching)), EXIT_OK


def run_solve(args: argparse.Namespace) -> CommandResult:
    return _solve_family(args) if args.kind == "family" else _solve_graph(args)


def run_verify(args: argparse.Namespace) -> CommandResult:
    if args.kind == "family":
        family = parse_family(_read(args.file))
        check = validate_transversal(family, parse_assignment(_read(args.assignment)))
        fields = [
            ("command", "verify family"),
            ("reason", check.reason),
            ("verdict", "valid" if check.valid else "invalid"),
        ]
        return format_report(fields), EXIT_OK if check.valid else EXIT_NEGATIVE

    graph = parse_graph(_read(args.file))
    check = validate_matching(graph, parse_matching(_read(args.matching)), args.saturate_a)
    fields = [
        ("command", "verify graph"),
        ("saturates_a", check.saturates_a),
        ("reason", check.reason),
        ("verdict", "valid" if check.valid else "invalid"),
    ]
    return format_report(fields), EXIT_OK if check.valid else EXIT_NEGATIVE


def run_gen(args: argparse.Namespace) -> CommandResult:
    if args.kind == "family":
        family = gen_family(args.n, args.l, args.m, args.universe, seed=args.seed)
        return serialize_family(family), EXIT_OK
    order = PlaneOrder(args.q)
    if args.kind == "plane":
        return serialize_graph(gen_plane_incidence(order)), EXIT_OK
    return serialize_graph(gen_theorem3_instance(order, args.n)), EXIT_OK


def run_bench(args: argparse.Namespace) -> CommandResult:
    workers = args.workers or get_settings().bench_workers
    summary = run_benchmark(
        args.trials, args.n, args.l, args.m, args.universe,
        master_seed=args.seed, rounds_cap=args.max_resamples, workers=workers,
    )
    header = format_report([
        ("command", "bench"),
        ("trials", args.trials),
        ("n", args.n),
        ("l", args.l),
        ("m", args.m),
        ("universe", args.universe),
        ("seed", args.seed),
    ])
    table = "trial resamples outcome\n" + "".join(
        f"{t.trial} {t.resamples} {'found' if t.found else 'exhausted'}\n" for t in summary.trials
    )
    footer = format_report([
        ("success_rate", summary.success_rate),
        ("mean_resamples", summary.mean_resamples),
        ("outcome", "found" if summary.all_found else "exhausted"),
    ])
    return header + table + footer, EXIT_OK if summary.all_found else EXIT_NEGATIVE


HANDLERS = {
    "check": run_check,
    "solve": run_solve,
    "verify": run_verify,
    "gen": run_gen,
    "bench": run_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Application entry point.

    Returns:
        Exit code (0 positive verdict, 1 negative verdict, 2 error)
    """
    try:
        args = parse_arguments(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        settings = get_settings()
        setup_logging(
            log_level=settings.log_level,
            log_dir=settings.log_dir,
            enable_console=True,
            enable_file=settings.log_to_file,
            json_format=settings.log_format == "json",
        )
        logger = get_logger(__name__)

        # the user sees failures through the "error:" line below
        operation = f"{args.command} {getattr(args, 'kind', '')}".strip()
        with LogContext(logger, operation, failure_level=logging.INFO, command=args.command):
            output, code = HANDLERS[args.command](args)
        sys.stdout.write(output)
        return code

    except TransversalError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    except (OSError, UnicodeDecodeError) as e:
        print(f"error: cannot read input: {e}", file=sys.stderr)
        return EXIT_USAGE

    except KeyboardInterrupt:  # pragma: no cover
        print("\ncancelled", file=sys.stderr)
        return 130


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
