# anclab/services/scheme/baseline.py
"""
Classic interval ancestry scheme (about 2 log n bits)

Depth-first numbering with one counter bumped on entry and on exit: every
node gets [entry, exit], intervals of distinct nodes are disjoint or strictly
nested, and strict nesting is exactly strict ancestry. Used as the benchmark
baseline and as a second oracle.
"""

from typing import Dict, NamedTuple

from anclab.services.scheme.forest import Forest


class BaselineLabel(NamedTuple):
    lo: int
    hi: int


def baseline_label(F: Forest) -> Dict[int, BaselineLabel]:
    """Entry/exit numbering, trees and children visited in input order."""
    labels: Dict[int, BaselineLabel] = {}
    entry = [0] * (F.node_count + 1)
    counter = 0
    children = F.children
    # (node, exiting)
    stack = [(r, False) for r in reversed(F.roots)]
    while stack:
        v, exiting = stack.pop()
        counter += 1
        if exiting:
            labels[v] = BaselineLabel(entry[v], counter)
            continue
        entry[v] = counter
        stack.append((v, True))
        stack.extend((c, False) for c in reversed(children[v]))
    return labels


def baseline_is_ancestor(L_u: BaselineLabel, L_v: BaselineLabel) -> bool:
    return L_u.lo < L_v.lo and L_v.hi < L_u.hi


def baseline_endpoint_bits(n: int) -> int:
    """ceil(log2(2n + 1)) bits hold any endpoint in [1, 2n]."""
    return (2 * n).bit_length()


def baseline_bits(n: int) -> int:
    """Bits of one baseline label: two endpoints."""
    return 2 * baseline_endpoint_bits(n)
