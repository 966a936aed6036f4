# anclab/services/selftest.py
"""
Self-test: every scheme against the forest oracles

Exhaustive mode walks all parent arrays with up to max_n nodes (sum of n!
forests), labels each one with d set to its own depth, and compares every
ordered node pair:
- compact ancestry decoder vs the ancestor oracle
- adjacency decoder vs the parent/child relation
- baseline decoder vs the ancestor oracle
- universal-graph embedding of the whole forest

Randomized mode does the same on generated forests, with sampled pairs for
large forests.
"""

import logging
import time
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

import anclab.core.logger  # noqa: F401
from anclab.core.config import Config
from anclab.models import SelftestReport
from anclab.services.scheme.baseline import baseline_is_ancestor, baseline_label
from anclab.services.scheme.decoder import is_adjacent, is_ancestor, make_adj_label
from anclab.services.scheme.forest import (
    Forest,
    enumerate_forests,
    gen_forest,
    is_ancestor_oracle,
    is_edge,
)
from anclab.services.scheme.marker import label_forest
from anclab.services.scheme.params import build_params
from anclab.services.scheme.universal import embed_check

logger = logging.getLogger('ANCLAB.Selftest')

Pair = Tuple[int, int]


def check_forest(report: SelftestReport, F: Forest, n: int, d: int,
                 pairs: Optional[Iterable[Pair]] = None, embed: bool = True) -> None:
    """Label F under F(n, d) and add its pair comparisons to report."""
    P = build_params(n, d)
    labeling = label_forest(P, F, check_uk=True)
    adj = [0] + [make_adj_label(P, labeling[v], F.depth[v]) for v in F.nodes()]
    base = baseline_label(F)

    if pairs is None:
        pairs = ((u, v) for u in F.nodes() for v in F.nodes())

    checked = ancestry = adjacency = baseline = 0
    for u, v in pairs:
        oracle = is_ancestor_oracle(F, u, v)
        checked += 1
        if is_ancestor(P, labeling[u], labeling[v]) != oracle:
            ancestry += 1
            logger.warning(f"Ancestry mismatch ({u}, {v}) in {F!r} parents={F.raw_parents()}")
        if is_adjacent(P, adj[u], adj[v]) != is_edge(F, u, v):
            adjacency += 1
            logger.warning(f"Adjacency mismatch ({u}, {v}) in {F!r} parents={F.raw_parents()}")
        if baseline_is_ancestor(base[u], base[v]) != oracle:
            baseline += 1
            logger.warning(f"Baseline mismatch ({u}, {v}) in {F!r}")

    report.pairs_checked += checked
    report.ancestry_mismatches += ancestry
    report.adjacency_mismatches += adjacency
    report.baseline_mismatches += baseline

    if embed and not embed_check(P, F, labeling):
        report.embed_failures += 1
    report.forests_checked += 1


def run_selftest(max_n: Optional[int] = None) -> SelftestReport:
    """All forests with 1..max_n nodes, all ordered pairs."""
    max_n = Config.SELFTEST_MAX_N if max_n is None else max_n
    report = SelftestReport(max_n=max_n)
    start = time.perf_counter()
    for n in range(1, max_n + 1):
        before = report.forests_checked
        for F in enumerate_forests(n):
            check_forest(report, F, n, F.max_depth)
        logger.info(f"n={n}: {report.forests_checked - before} forests checked")
    report.seconds = time.perf_counter() - start
    return report


def run_random_selftest(forests: int, n_values: Sequence[int], d_values: Sequence[int],
                        pairs_per_forest: int = 200, all_pairs_up_to: int = 128,
                        seed: Optional[int] = None, embed_up_to: int = 0) -> SelftestReport:
    """
    Random forests cycling over the (n, d) grid.

    Forests with at most all_pairs_up_to nodes get every ordered pair as well
    as pairs_per_forest sampled ones; embed_check runs for n <= embed_up_to.
    """
    rng = np.random.default_rng(Config.SEED if seed is None else seed)
    report = SelftestReport(max_n=max(n_values))
    start = time.perf_counter()
    grid = [(n, d) for n in n_values for d in d_values]
    for i in range(forests):
        n, d = grid[i % len(grid)]
        F = gen_forest(n, d, "random", seed=int(rng.integers(0, 2 ** 32)))
        sampled = rng.integers(1, F.node_count + 1, size=(pairs_per_forest, 2)).tolist()
        if F.node_count <= all_pairs_up_to:
            sampled += [(u, v) for u in F.nodes() for v in F.nodes()]
        check_forest(report, F, n, d, pairs=sampled, embed=F.node_count <= embed_up_to)
    report.seconds = time.perf_counter() - start
    logger.info(f"Random self-test: {report.forests_checked} forests, {report.pairs_checked} pairs")
    return report
