# anclab/models/__init__.py
from .label_models import (
    BenchConfig,
    BenchRow,
    LabelFileHeader,
    LabelRow,
    LabelStats,
    SelftestReport,
)

__all__ = [
    "BenchConfig",
    "BenchRow",
    "LabelFileHeader",
    "LabelRow",
    "LabelStats",
    "SelftestReport",
]
