# anclab/services/scheme/schemes.py
"""
Common surface of the two ancestry schemes, so benchmark and self-test code
can run either one the same way.
"""

from typing import Any, Dict, Protocol

from anclab.services.scheme.baseline import (
    BaselineLabel,
    baseline_bits,
    baseline_is_ancestor,
    baseline_label,
)
from anclab.services.scheme.decoder import is_ancestor
from anclab.services.scheme.forest import Forest
from anclab.services.scheme.marker import label_forest
from anclab.services.scheme.params import ParamTable, ancestry_bits, build_params


class LabelingScheme(Protocol):
    name: str

    def label(self, F: Forest) -> Dict[int, Any]: ...

    def is_ancestor(self, a: Any, b: Any) -> bool: ...

    def label_bits(self) -> int: ...

    def observed_bits(self, labels: Dict[int, Any]) -> int: ...


class CompactScheme:
    """log n + 2 log d + O(1) scheme for F(n, d)."""

    name = "anclab"

    def __init__(self, n: int, d: int, check_uk: bool = False):
        self.params: ParamTable = build_params(n, d)
        self.check_uk = check_uk

    def label(self, F: Forest) -> Dict[int, int]:
        return label_forest(self.params, F, check_uk=self.check_uk).as_dict()

    def is_ancestor(self, a: int, b: int) -> bool:
        return is_ancestor(self.params, a, b)

    def label_bits(self) -> int:
        return ancestry_bits(self.params)

    def observed_bits(self, labels: Dict[int, int]) -> int:
        return max(labels.values(), default=0).bit_length()


class BaselineScheme:
    """Entry/exit interval scheme, 2 ceil(log2(2n + 1)) bits."""

    name = "baseline"

    def __init__(self, n: int, d: int):
        self.n = n

    def label(self, F: Forest) -> Dict[int, BaselineLabel]:
        return baseline_label(F)

    def is_ancestor(self, a: BaselineLabel, b: BaselineLabel) -> bool:
        return baseline_is_ancestor(a, b)

    def label_bits(self) -> int:
        return baseline_bits(self.n)

    def observed_bits(self, labels: Dict[int, BaselineLabel]) -> int:
        top = max((label.hi for label in labels.values()), default=0)
        return 2 * top.bit_length()


SCHEMES = {
    CompactScheme.name: CompactScheme,
    BaselineScheme.name: BaselineScheme,
}
