import os
from dotenv import load_dotenv

from anclab.core.errors import ConfigError

# Load .env from project root (parent of the package)
PACKAGE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
PROJECT_ROOT = os.path.dirname(PACKAGE_DIR)
load_dotenv(os.path.join(PROJECT_ROOT, ".env"))


def _int_setting(name: str, default: int, minimum: int) -> int:
    """Read an integer of at least `minimum` from the environment."""
    raw = os.getenv(name, str(default))
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}")
    return value


def _positive_int(name: str, default: int) -> int:
    return _int_setting(name, default, 1)


def _seed(name: str, default: int) -> int:
    """Read a non-negative RNG seed from the environment."""
    return _int_setting(name, default, 0)


class Config:
    # ============================================================
    # Reproducibility
    # ============================================================
    SEED = _seed("ANCLAB_SEED", 42)

    # ============================================================
    # Logging
    # ============================================================
    LOG_LEVEL = os.getenv("ANCLAB_LOG_LEVEL", "INFO").upper()

    # ============================================================
    # Enumeration / self-test guards
    # ============================================================
    MAX_ENUM_N = _positive_int("ANCLAB_MAX_ENUM_N", 8)
    SELFTEST_MAX_N = _positive_int("ANCLAB_SELFTEST_MAX_N", 7)
    MATERIALIZE_LIMIT = _positive_int("ANCLAB_MATERIALIZE_LIMIT", 5000)

    # ============================================================
    # Generators
    # ============================================================
    RANDOM_NEW_TREE_ODDS = _positive_int("ANCLAB_RANDOM_NEW_TREE_ODDS", 16)  # new tree w.p. 1/odds

    # ============================================================
    # Benchmark
    # ============================================================
    BENCH_QUERIES = _positive_int("ANCLAB_BENCH_QUERIES", 1_000_000)
    BENCH_SPOT_CHECKS = _positive_int("ANCLAB_BENCH_SPOT_CHECKS", 1000)
    BENCH_WORKERS = _positive_int("ANCLAB_BENCH_WORKERS", 1)
    BENCH_MAX_LABEL_N = _positive_int("ANCLAB_BENCH_MAX_LABEL_N", 1 << 22)
