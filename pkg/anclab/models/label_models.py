# anclab/models/label_models.py
"""
Pydantic Models for Files and Reports

Structured records that cross a file or report boundary: the label file
header and rows, benchmark configuration and result rows, labeling
statistics and the self-test summary.
"""

from typing import Dict, List

from pydantic import BaseModel, Field, field_validator

from anclab.core.config import Config


# ============================================================
# LABEL FILE
# ============================================================

class LabelFileHeader(BaseModel):
    """Family context a decoder needs; reproduces the parameter table exactly."""

    n_input: int = Field(ge=1, description="Declared node bound n")
    d: int = Field(ge=1, description="Depth bound d")
    n_pow2: int = Field(ge=1, description="n rounded up to a power of two")
    gamma_k: int = Field(ge=2, description="Exclusive end of the label space [1, Gamma_K)")
    ancestry_bits: int = Field(ge=1)
    adjacency_bits: int = Field(ge=0)


class LabelRow(BaseModel):
    node_id: int = Field(ge=1)
    nu: int = Field(ge=1, description="Ancestry label")
    depth: int = Field(ge=1)
    adj: int = Field(ge=0, description="Packed adjacency label (nu - 1) * d + depth - 1")


# ============================================================
# STATISTICS
# ============================================================

class LabelStats(BaseModel):
    """What one labeling actually used."""

    node_count: int
    max_bits: int = Field(description="Bit length of the largest label assigned")
    level_histogram: Dict[int, int] = Field(default_factory=dict, description="level -> node count")


class SelftestReport(BaseModel):
    max_n: int
    forests_checked: int = 0
    pairs_checked: int = 0
    ancestry_mismatches: int = 0
    adjacency_mismatches: int = 0
    baseline_mismatches: int = 0
    embed_failures: int = 0
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not (self.ancestry_mismatches or self.adjacency_mismatches
                    or self.baseline_mismatches or self.embed_failures)


# ============================================================
# BENCHMARK
# ============================================================

class BenchConfig(BaseModel):
    """Grid of benchmark cells, loaded from a JSON file."""

    families: List[str] = Field(default_factory=lambda: ["random"])
    n_values: List[int] = Field(default_factory=lambda: [16, 1 << 10])
    d_values: List[int] = Field(default_factory=lambda: [2, 8])
    trials: int = Field(default=1, ge=1)
    seed: int = Field(default_factory=lambda: Config.SEED)
    queries: int = Field(default_factory=lambda: Config.BENCH_QUERIES, ge=1)
    spot_checks: int = Field(default_factory=lambda: Config.BENCH_SPOT_CHECKS, ge=0)
    workers: int = Field(default_factory=lambda: Config.BENCH_WORKERS, ge=1)

    @field_validator("n_values", "d_values")
    @classmethod
    def _positive(cls, values: List[int]) -> List[int]:
        if not values or any(v < 1 for v in values):
            raise ValueError("grid values must be positive integers")
        return values


class BenchRow(BaseModel):
    family: str
    n: int
    d: int
    trials: int
    scheme: str = Field(description="anclab | baseline")
    max_bits: int = Field(description="Label size of the scheme for this (n, d)")
    observed_bits: int = Field(description="Largest label bit length actually assigned")
    theoretical_bound_bits: int
    label_seconds: float
    queries_per_second: float
    spot_check_mismatches: int = 0
