# Services Package - labeling schemes, ingestion, benchmark, self-test
from .bench import run_bench
from .selftest import run_random_selftest, run_selftest

__all__ = ["run_bench", "run_random_selftest", "run_selftest"]
