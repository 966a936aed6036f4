# anclab/services/scheme/forest.py
"""
Rooted Forest Model

Nodes are dense integers 1..n; parent 0 marks a root. A Forest is built only
through validate_forest, which rejects cycles, dangling parents and forests
deeper than the bound d, and precomputes depths, child lists and subtree
sizes. Every tree the labeler works on is a full subtree of the input forest,
so these global arrays answer all size questions during decomposition.
"""

import itertools
import logging
import re
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

import anclab.core.logger  # noqa: F401
from anclab.core.config import Config
from anclab.core.errors import (
    CycleDetected,
    DepthExceeded,
    EnumerationTooLarge,
    ShapeError,
    UnknownParent,
)

logger = logging.getLogger('ANCLAB.Forest')

ROOT = 0


class Forest:
    """
    Immutable rooted forest.

    parent, depth and size are indexed by node id (index 0 is unused);
    children[0] lists the roots, children[v] the children of v, both in
    increasing id order.
    """

    __slots__ = ("node_count", "parent", "depth", "children", "size", "max_depth")

    def __init__(self, parent: Tuple[int, ...], depth: Tuple[int, ...],
                 children: Tuple[Tuple[int, ...], ...], size: Tuple[int, ...]):
        self.node_count = len(parent) - 1
        self.parent = parent
        self.depth = depth
        self.children = children
        self.size = size
        self.max_depth = max(depth[1:], default=0)

    def __len__(self) -> int:
        return self.node_count

    def __repr__(self) -> str:
        return f"Forest(n={self.node_count}, depth={self.max_depth}, trees={len(self.roots)})"

    @property
    def roots(self) -> Tuple[int, ...]:
        return self.children[ROOT]

    def nodes(self) -> range:
        return range(1, self.node_count + 1)

    def parent_of(self, v: int) -> Optional[int]:
        p = self.parent[v]
        return None if p == ROOT else p

    def raw_parents(self) -> List[int]:
        """Parent list in the form validate_forest accepts."""
        return list(self.parent[1:])

    def edges(self) -> Iterator[Tuple[int, int]]:
        """(parent, child) pairs."""
        for v in self.nodes():
            p = self.parent[v]
            if p != ROOT:
                yield p, v

    def subtree(self, root: int) -> List[int]:
        """Nodes of the subtree rooted at root, in preorder."""
        out: List[int] = []
        stack = [root]
        children = self.children
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(children[v]))
        return out


# ============================================================
# VALIDATION
# ============================================================

def validate_forest(raw: Sequence[int], d: int) -> Forest:
    """
    Build a Forest from a parent list (raw[v - 1] is the parent of v, 0 for a root).

    Raises:
        UnknownParent: a parent id outside 0..n
        CycleDetected: parent references loop
        DepthExceeded: some node deeper than d
    """
    n = len(raw)
    parent = [ROOT] * (n + 1)
    for v, p in enumerate(raw, start=1):
        if not isinstance(p, (int, np.integer)) or not 0 <= p <= n:
            raise UnknownParent(v, p)
        parent[v] = int(p)

    depth = [0] * (n + 1)
    mark = [0] * (n + 1)
    for v in range(1, n + 1):
        if depth[v]:
            continue
        path = []
        u = v
        while u != ROOT and depth[u] == 0:
            if mark[u] == v:
                raise CycleDetected(u)
            mark[u] = v
            path.append(u)
            u = parent[u]
        base = depth[u] if u != ROOT else 0
        for w in reversed(path):
            base += 1
            depth[w] = base

    deepest = max(depth[1:], default=0)
    if deepest > d:
        raise DepthExceeded(d, deepest)

    children: List[List[int]] = [[] for _ in range(n + 1)]
    for v in range(1, n + 1):
        children[parent[v]].append(v)

    order = list(children[ROOT])
    for v in order:
        order.extend(children[v])
    size = [1] * (n + 1)
    size[ROOT] = n
    for v in reversed(order):
        p = parent[v]
        if p != ROOT:
            size[p] += size[v]

    return Forest(tuple(parent), tuple(depth), tuple(tuple(c) for c in children), tuple(size))


# ============================================================
# SEPARATOR / SPINE
# ============================================================

class SpineDecomposition(NamedTuple):
    """
    spine: v_1 (separator) .. v_d' (root of T), bottom-up.
    hanging: F_1 .. F_d' as tuples of tree roots; F_i holds the children of
    v_i other than v_{i-1}. Empty F_i are kept so indices match the spine.
    """
    spine: Tuple[int, ...]
    hanging: Tuple[Tuple[int, ...], ...]

    @property
    def depth_prime(self) -> int:
        return len(self.spine)


def separator(F: Forest, root: int) -> int:
    """
    Separator of the subtree T rooted at root that is closest to the root.

    Walks down the heavy path while some child subtree holds more than
    |T| / 2 nodes. Every node above the stopping point has such a child, so
    the first node without one is the shallower of the (at most two)
    separators.
    """
    total = F.size[root]
    size = F.size
    children = F.children
    v = root
    while True:
        for c in children[v]:
            if 2 * size[c] > total:
                v = c
                break
        else:
            return v


def spine_decompose(F: Forest, root: int) -> SpineDecomposition:
    """Split the subtree rooted at root into its spine and hanging forests."""
    sep = separator(F, root)
    parent, children = F.parent, F.children
    spine = [sep]
    u = sep
    while u != root:
        u = parent[u]
        spine.append(u)

    # the separator keeps all its children; above it, drop the spine child
    hanging = [children[sep]]
    below = sep
    for v in spine[1:]:
        ch = children[v]
        hanging.append(() if len(ch) == 1 else tuple(c for c in ch if c != below))
        below = v
    return SpineDecomposition(tuple(spine), tuple(hanging))


# ============================================================
# ORACLE
# ============================================================

def is_ancestor_oracle(F: Forest, u: int, v: int) -> bool:
    """True iff u is a strict ancestor of v (climbs v's parent chain)."""
    depth = F.depth
    gap = depth[v] - depth[u]
    if gap <= 0:
        return False
    parent = F.parent
    for _ in range(gap):
        v = parent[v]
    return v == u


def is_edge(F: Forest, u: int, v: int) -> bool:
    """True iff u and v are parent and child in either order."""
    return F.parent[v] == u or F.parent[u] == v


# ============================================================
# GENERATORS
# ============================================================

SHAPES = ("random", "path", "star", "kary", "forest_of")
_SHAPE_RE = re.compile(r"^\s*([a-z_]+)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def parse_shape(shape: str) -> Tuple[str, Optional[int]]:
    """'kary(6)' -> ('kary', 6); 'random' -> ('random', None)."""
    match = _SHAPE_RE.match(shape)
    if not match or match.group(1) not in SHAPES:
        raise ShapeError(f"Unknown forest shape {shape!r}; expected one of {', '.join(SHAPES)}")
    name, arg = match.group(1), match.group(2)
    if name in ("kary", "forest_of") and arg is None:
        raise ShapeError(f"Shape {name} needs an argument, e.g. {name}(3)")
    return name, int(arg) if arg is not None else None


def _attach_random(raw: List[int], depth: List[int], start: int, n: int, d: int,
                   rng: np.random.Generator, new_tree_odds: Optional[int]) -> None:
    """Append nodes start..n, each under a uniform node of depth < d (or as a new root)."""
    eligible = [v for v in range(1, start) if depth[v] < d]
    coins = rng.integers(0, new_tree_odds, size=n + 1) if new_tree_odds else None
    picks = rng.random(size=n + 1)
    for v in range(start, n + 1):
        if not eligible or (coins is not None and coins[v] == 0):
            p = ROOT
        else:
            p = eligible[int(picks[v] * len(eligible))]
        raw.append(p)
        depth.append(1 if p == ROOT else depth[p] + 1)
        if depth[v] < d:
            eligible.append(v)


def gen_forest(n: int, d: int, shape: str = "random", seed: Optional[int] = None) -> Forest:
    """
    Generate a forest of n nodes and depth <= d.

    Shapes: random, path, star, kary(b), forest_of(t). The random shape
    starts a new tree with probability 1/ANCLAB_RANDOM_NEW_TREE_ODDS and
    otherwise picks the parent uniformly among existing nodes of depth < d.
    forest_of(t) starts t roots and grows them the same way without new trees.

    Raises:
        ShapeError: shape unknown or not realizable within (n, d)
    """
    name, arg = parse_shape(shape)
    if n < 1 or d < 1:
        raise ShapeError(f"Need n >= 1 and d >= 1, got n={n}, d={d}")
    rng = np.random.default_rng(Config.SEED if seed is None else seed)

    if name == "path":
        if n > d:
            raise ShapeError(f"A path of {n} nodes has depth {n} > d={d}")
        raw = list(range(n))
    elif name == "star":
        if n > 1 and d < 2:
            raise ShapeError("A star with leaves needs d >= 2")
        raw = [ROOT] + [1] * (n - 1)
    elif name == "kary":
        if arg < 1:
            raise ShapeError("kary needs a branching factor >= 1")
        raw = [ROOT] + [(v - 2) // arg + 1 for v in range(2, n + 1)]
    elif name == "forest_of":
        if not 1 <= arg <= n:
            raise ShapeError(f"forest_of({arg}) needs 1 <= t <= n={n}")
        if d == 1 and arg != n:
            raise ShapeError(f"With d=1 every node is a root; forest_of({arg}) needs t = n")
        raw = [ROOT] * arg
        depth = [0] + [1] * arg
        _attach_random(raw, depth, arg + 1, n, d, rng, None)
    else:
        raw = [ROOT]
        depth = [0, 1]
        _attach_random(raw, depth, 2, n, d, rng, Config.RANDOM_NEW_TREE_ODDS)

    try:
        forest = validate_forest(raw, d)
    except DepthExceeded as e:
        raise ShapeError(f"Shape {shape} with n={n} does not fit depth d={d}: {e}")
    logger.debug(f"Generated {shape} forest n={n} d={d} seed={seed}: {forest!r}")
    return forest


def enumerate_forests(n: int) -> Iterator[Forest]:
    """
    Every parent array with parent[i] in {root, 1..i-1}: exactly n! forests.

    Each rooted forest on n nodes has a numbering where parents precede
    children, so every shape appears at least once.
    """
    if n > Config.MAX_ENUM_N:
        raise EnumerationTooLarge(f"Refusing to enumerate {n}! forests (limit n <= {Config.MAX_ENUM_N})")
    if n < 0:
        raise EnumerationTooLarge(f"Node count must be >= 0, got {n}")
    for raw in itertools.product(*(range(i) for i in range(1, n + 1))):
        yield validate_forest(raw, max(n, 1))
