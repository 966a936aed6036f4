# anclab/services/bench.py
"""
Benchmark: compact scheme vs the interval baseline

Runs a grid of (family, n, d) cells. Each cell generates `trials` forests,
labels them with both schemes, times the labeling, times a sample of random
decoded queries and spot-checks a sample of pairs against the forest
oracle. Cells are independent (own seed, own parameter table) and may run
in a process pool.

Cells whose n is too large to generate are reported from the parameter
tables alone, so size crossovers at huge n still appear in the report.

Usage:
    config = load_bench_config("bench.json")
    rows = run_bench(config)
    write_bench_csv(rows, "bench.csv")
"""

import csv
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Iterable, List, NamedTuple, Optional

import numpy as np
from pydantic import ValidationError

import anclab.core.logger  # noqa: F401
from anclab.core.config import Config
from anclab.core.errors import ConfigError
from anclab.models import BenchConfig, BenchRow
from anclab.services.scheme.baseline import baseline_bits
from anclab.services.scheme.forest import Forest, gen_forest, is_ancestor_oracle, parse_shape
from anclab.services.scheme.params import build_params, size_bound_bits
from anclab.services.scheme.schemes import SCHEMES, CompactScheme, LabelingScheme

logger = logging.getLogger('ANCLAB.Bench')


class BenchCell(NamedTuple):
    family: str
    n: int
    d: int
    trials: int
    seed: int
    queries: int
    spot_checks: int


# ============================================================
# CONFIG
# ============================================================

def load_bench_config(path: str) -> BenchConfig:
    """
    Read a JSON grid file.

    Raises:
        ConfigError: unreadable file or invalid grid
    """
    try:
        with open(path, encoding="utf-8") as f:
            return BenchConfig.model_validate_json(f.read())
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError(f"Cannot read bench config {path}: {e}")
    except ValidationError as e:
        raise ConfigError(f"Invalid bench config {path}: {e}")


def build_cells(config: BenchConfig) -> List[BenchCell]:
    """Expand the grid; every family string is checked before anything runs."""
    for family in config.families:
        parse_shape(family)
    return [
        BenchCell(family, n, d, config.trials, config.seed, config.queries, config.spot_checks)
        for family in config.families
        for n in config.n_values
        for d in config.d_values
    ]


def _trial_seed(cell: BenchCell, trial: int) -> int:
    seq = np.random.SeedSequence([cell.seed, cell.n, cell.d, trial, *cell.family.encode()])
    return int(seq.generate_state(1)[0])


# ============================================================
# MEASUREMENTS
# ============================================================

def _queries_per_second(scheme: LabelingScheme, labels: List[Any], pairs: np.ndarray) -> float:
    decode = scheme.is_ancestor
    us, vs = pairs[:, 0].tolist(), pairs[:, 1].tolist()
    start = time.perf_counter()
    for u, v in zip(us, vs):
        decode(labels[u], labels[v])
    elapsed = time.perf_counter() - start
    return len(us) / elapsed if elapsed > 0 else float("inf")


def _spot_check(scheme: LabelingScheme, labels: List[Any], F: Forest, pairs: np.ndarray) -> int:
    mismatches = 0
    for u, v in pairs.tolist():
        if scheme.is_ancestor(labels[u], labels[v]) != is_ancestor_oracle(F, u, v):
            mismatches += 1
            logger.warning(f"{scheme.name}: ancestry of ({u}, {v}) disagrees with the oracle in {F!r}")
    return mismatches


def _table_rows(cell: BenchCell) -> List[BenchRow]:
    P = build_params(cell.n, cell.d)
    compact = CompactScheme(cell.n, cell.d)
    return [
        BenchRow(family=cell.family, n=cell.n, d=cell.d, trials=0, scheme=compact.name,
                 max_bits=compact.label_bits(), observed_bits=0,
                 theoretical_bound_bits=size_bound_bits(P),
                 label_seconds=0.0, queries_per_second=0.0),
        BenchRow(family=cell.family, n=cell.n, d=cell.d, trials=0, scheme="baseline",
                 max_bits=baseline_bits(cell.n), observed_bits=0,
                 theoretical_bound_bits=baseline_bits(cell.n),
                 label_seconds=0.0, queries_per_second=0.0),
    ]


def run_cell(cell: BenchCell) -> List[BenchRow]:
    """
    Both schemes on one (family, n, d) cell; one row per scheme.

    Raises:
        ShapeError: the family cannot be realized within (n, d)
    """
    if cell.n > Config.BENCH_MAX_LABEL_N:
        logger.info(f"Cell {cell.family} n={cell.n} d={cell.d}: table only")
        return _table_rows(cell)

    P = build_params(cell.n, cell.d)
    schemes: List[LabelingScheme] = [factory(cell.n, cell.d) for factory in SCHEMES.values()]
    label_seconds = {s.name: 0.0 for s in schemes}
    qps = {s.name: 0.0 for s in schemes}
    observed = {s.name: 0 for s in schemes}
    mismatches = {s.name: 0 for s in schemes}

    for trial in range(cell.trials):
        seed = _trial_seed(cell, trial)
        F = gen_forest(cell.n, cell.d, cell.family, seed=seed)
        rng = np.random.default_rng(seed)
        query_pairs = rng.integers(1, F.node_count + 1, size=(cell.queries, 2))
        check_pairs = rng.integers(1, F.node_count + 1, size=(cell.spot_checks, 2))

        for scheme in schemes:
            start = time.perf_counter()
            by_node = scheme.label(F)
            label_seconds[scheme.name] += time.perf_counter() - start
            labels = [None] + [by_node[v] for v in F.nodes()]

            observed[scheme.name] = max(observed[scheme.name], scheme.observed_bits(by_node))
            qps[scheme.name] += _queries_per_second(scheme, labels, query_pairs)
            mismatches[scheme.name] += _spot_check(scheme, labels, F, check_pairs)

    rows = []
    for scheme in schemes:
        bound = size_bound_bits(P) if scheme.name == CompactScheme.name else scheme.label_bits()
        rows.append(BenchRow(
            family=cell.family,
            n=cell.n,
            d=cell.d,
            trials=cell.trials,
            scheme=scheme.name,
            max_bits=scheme.label_bits(),
            observed_bits=observed[scheme.name],
            theoretical_bound_bits=bound,
            label_seconds=label_seconds[scheme.name] / cell.trials,
            queries_per_second=qps[scheme.name] / cell.trials,
            spot_check_mismatches=mismatches[scheme.name],
        ))
    logger.info(f"Cell {cell.family} n={cell.n} d={cell.d}: "
                + ", ".join(f"{r.scheme}={r.max_bits} bits" for r in rows))
    return rows


def run_bench(config: BenchConfig, workers: Optional[int] = None) -> List[BenchRow]:
    """Run every cell of the grid; rows come back in grid order."""
    cells = build_cells(config)
    workers = workers or config.workers
    logger.info(f"Running {len(cells)} bench cells with {workers} worker(s)")
    if workers == 1:
        results = [run_cell(cell) for cell in cells]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_cell, cells))
    return [row for rows in results for row in rows]


# ============================================================
# OUTPUT
# ============================================================

def write_bench_csv(rows: Iterable[BenchRow], path: Optional[str] = None) -> None:
    """CSV with one column per BenchRow field; stdout when no path is given."""
    fields = list(BenchRow.model_fields)
    out = open(path, "w", encoding="utf-8", newline="") if path else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row.model_dump())
    finally:
        if path:
            out.close()
