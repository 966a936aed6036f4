#!/usr/bin/env python3
"""
anclab CLI

Command-line interface for the anclab package: parameter tables, labeling
forest files, label-only queries, benchmarks, universal-graph checks and
self-tests.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal
assertion (a bound of the construction failed).
"""
import argparse
import sys
from typing import List, Optional

from anclab.core.config import Config
from anclab.core.errors import AnclabError, SchemeAssertionError
from anclab.core.logger import set_verbose
from anclab.models import LabelStats, SelftestReport
from anclab.services.bench import load_bench_config, run_bench, write_bench_csv
from anclab.services.ingest import (
    format_parent_list,
    ingest_path,
    read_label_file,
    write_label_file,
)
from anclab.services.scheme.decoder import is_adjacent, is_ancestor
from anclab.services.scheme.forest import gen_forest
from anclab.services.scheme.marker import label_forest, label_stats
from anclab.services.scheme.params import (
    ParamTable,
    adjacency_bits,
    ancestry_bits,
    build_params,
    size_bound_bits,
)
from anclab.services.scheme.universal import (
    embed_check,
    materialize,
    universal_vertex_count,
    write_edge_list,
)
from anclab.services.selftest import run_random_selftest, run_selftest

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_ASSERTION = 3


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def setup_parser() -> argparse.ArgumentParser:
    """Set up the argument parser with subcommands."""
    parser = _Parser(
        description="anclab - compact ancestry and adjacency labels for bounded-depth forests",
        prog="anclab"
    )

    # Global arguments
    parser.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Enable debug logging"
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"RNG seed for generated forests (default: ANCLAB_SEED={Config.SEED})"
    )

    subparsers = parser.add_subparsers(
        dest="command",
        help="Available commands",
        required=True,
        parser_class=_Parser,
    )

    # Parameter table
    params_parser = subparsers.add_parser(
        "params",
        help="Print the parameter table and label sizes for F(n, d)"
    )
    params_parser.add_argument("n", type=int, help="Node bound n")
    params_parser.add_argument("d", type=int, help="Depth bound d")

    # Generate a forest file
    gen_parser = subparsers.add_parser(
        "gen",
        help="Write a generated forest as a parent-list file"
    )
    gen_parser.add_argument("n", type=int, help="Node count")
    gen_parser.add_argument("d", type=int, help="Depth bound")
    gen_parser.add_argument(
        "--shape",
        default="random",
        help="random, path, star, kary(b) or forest_of(t) (default: random)"
    )
    gen_parser.add_argument("-o", "--output", help="Output file (default: stdout)")

    # Label a forest
    label_parser = subparsers.add_parser(
        "label",
        help="Label a parent-list or .xml forest file"
    )
    label_parser.add_argument("file", help="Forest file; .xml is read as an XML document")
    label_parser.add_argument("-o", "--output", required=True, help="Label file to write")
    label_parser.add_argument(
        "--check",
        action="store_true",
        help="Verify every assigned triplet against its recursive call (slower)"
    )

    # Query two labels
    query_parser = subparsers.add_parser(
        "query",
        help="Decide ancestry (or adjacency) from two labels and a label file header"
    )
    query_parser.add_argument("labelfile", help="Label file supplying the family (n, d)")
    query_parser.add_argument("u", type=int, help="Label of u")
    query_parser.add_argument("v", type=int, help="Label of v")
    query_parser.add_argument(
        "--adjacent",
        action="store_true",
        help="Treat u and v as packed adjacency labels and test adjacency"
    )

    # Benchmark
    bench_parser = subparsers.add_parser(
        "bench",
        help="Compare label sizes and speed against the interval baseline"
    )
    bench_parser.add_argument("config", help="JSON grid file (families, n_values, d_values, trials, ...)")
    bench_parser.add_argument("-o", "--output", help="CSV report path (default: stdout)")
    bench_parser.add_argument("--workers", type=int, help="Process pool size (default: from config)")

    # Universal graph
    universal_parser = subparsers.add_parser(
        "universal-check",
        help="Embed random forests into the universal graph of F(n, d)"
    )
    universal_parser.add_argument("n", type=int, help="Node bound n")
    universal_parser.add_argument("d", type=int, help="Depth bound d")
    universal_parser.add_argument("--trials", type=int, default=10, help="Random forests to embed (default: 10)")
    universal_parser.add_argument("--export", help="Write the edge list here (tiny tables only)")

    # Self-test
    selftest_parser = subparsers.add_parser(
        "selftest",
        help="Check every forest up to --max-n nodes against the oracles"
    )
    selftest_parser.add_argument(
        "--max-n",
        type=int,
        default=Config.SELFTEST_MAX_N,
        help=f"Largest forest size (default: {Config.SELFTEST_MAX_N})"
    )
    selftest_parser.add_argument(
        "--random",
        type=int,
        default=0,
        metavar="FORESTS",
        help="Also check this many random forests with n in 2^6..2^12, d in {2, 4, 8, 16}"
    )

    return parser


# ============================================================
# OUTPUT HELPERS
# ============================================================

def print_params(P: ParamTable):
    """Print the whole table, one level per row."""
    print(f"\n=== Parameters F({P.n_input}, {P.d}) ===")
    print(f"n'       : {P.n_pow2:,}  (K = {P.K})")
    print(f"Gamma_0  : {P.gamma_0:,}")
    print(f"{'k':>3} {'c_k':>10} {'x_k':>10} {'H_k':>14} {'J_k':>8} {'Gamma_k':>18}")
    for k in range(1, P.K + 1):
        print(f"{k:>3} {float(P.c[k]):>10.6f} {P.x_of(k):>10,} {P.H_of(k):>14,} "
              f"{P.J_of(k):>8,} {P.Gamma[k]:>18,}")
    print(f"\nGamma_K          : {P.gamma_k:,}")
    print(f"Ancestry bits    : {ancestry_bits(P)}  (bound {size_bound_bits(P)})")
    print(f"Adjacency bits   : {adjacency_bits(P)}  (bound {size_bound_bits(P, adjacency=True)})")
    print(f"Universal graph  : {universal_vertex_count(P):,} vertices")


def print_stats(stats: LabelStats):
    print(f"\n=== Labeling ===")
    print(f"Nodes     : {stats.node_count:,}")
    print(f"Max bits  : {stats.max_bits}")
    for level, count in stats.level_histogram.items():
        print(f"  level {level:>2}: {count:,}")


def print_report(report: SelftestReport):
    print(f"\n=== Self-test ===")
    print(f"Forests checked      : {report.forests_checked:,}")
    print(f"Pairs checked        : {report.pairs_checked:,}")
    print(f"Ancestry mismatches  : {report.ancestry_mismatches}")
    print(f"Adjacency mismatches : {report.adjacency_mismatches}")
    print(f"Baseline mismatches  : {report.baseline_mismatches}")
    print(f"Embed failures       : {report.embed_failures}")
    print(f"Time                 : {report.seconds:.2f}s")
    print("PASSED" if report.passed else "FAILED")


# ============================================================
# COMMANDS
# ============================================================

def _seed(args) -> int:
    return Config.SEED if args.seed is None else args.seed


def cmd_params(args) -> int:
    print_params(build_params(args.n, args.d))
    return EXIT_OK


def cmd_gen(args) -> int:
    F = gen_forest(args.n, args.d, args.shape, seed=_seed(args))
    text = format_parent_list(F, args.d)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
        print(f"Wrote {F!r} to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_label(args) -> int:
    ingested = ingest_path(args.file)
    P = build_params(ingested.n, ingested.d)
    labeling = label_forest(P, ingested.forest, check_uk=args.check)
    write_label_file(labeling, args.output)
    print(f"Labeled {ingested.forest!r} under F({ingested.n}, {ingested.d}) -> {args.output}")
    print_stats(label_stats(labeling))
    return EXIT_OK


def cmd_query(args) -> int:
    P = read_label_file(args.labelfile).params
    if args.adjacent:
        answer = is_adjacent(P, args.u, args.v)
    else:
        answer = is_ancestor(P, args.u, args.v)
    print("true" if answer else "false")
    return EXIT_OK


def cmd_bench(args) -> int:
    config = load_bench_config(args.config)
    if args.seed is not None:
        config = config.model_copy(update={"seed": args.seed})
    rows = run_bench(config, workers=args.workers)
    write_bench_csv(rows, args.output)
    if args.output:
        print(f"Wrote {len(rows)} rows to {args.output}")
    mismatches = sum(row.spot_check_mismatches for row in rows)
    return EXIT_ASSERTION if mismatches else EXIT_OK


def cmd_universal_check(args) -> int:
    P = build_params(args.n, args.d)
    print(f"Universal graph of F({args.n}, {args.d}): {universal_vertex_count(P):,} vertices")
    seed = _seed(args)
    passed = 0
    for trial in range(args.trials):
        F = gen_forest(args.n, args.d, "random", seed=seed + trial)
        if embed_check(P, F):
            passed += 1
    print(f"Embedded {passed}/{args.trials} random forests as induced subgraphs")
    if args.export:
        edges = materialize(P)
        write_edge_list(edges, args.export)
        print(f"Wrote {len(edges):,} edges to {args.export}")
    return EXIT_OK if passed == args.trials else EXIT_ASSERTION


def cmd_selftest(args) -> int:
    report = run_selftest(args.max_n)
    print_report(report)
    passed = report.passed
    if args.random:
        random_report = run_random_selftest(
            args.random,
            n_values=[1 << e for e in range(6, 13)],
            d_values=[2, 4, 8, 16],
            seed=_seed(args),
        )
        print_report(random_report)
        passed = passed and random_report.passed
    return EXIT_OK if passed else EXIT_ASSERTION


COMMANDS = {
    "params": cmd_params,
    "gen": cmd_gen,
    "label": cmd_label,
    "query": cmd_query,
    "bench": cmd_bench,
    "universal-check": cmd_universal_check,
    "selftest": cmd_selftest,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the exit code."""
    parser = setup_parser()
    args = parser.parse_args(argv)
    set_verbose(args.verbose)

    try:
        return COMMANDS[args.command](args)
    except KeyboardInterrupt:
        print("\nOperation interrupted by user.")
        return EXIT_OK
    except SchemeAssertionError as e:
        print(f"Internal error: {e}", file=sys.stderr)
        return EXIT_ASSERTION
    except (AnclabError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
