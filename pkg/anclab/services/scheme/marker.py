# anclab/services/scheme/marker.py
"""
Marker: embeds a forest into the label space U = [1, Gamma_K)

Every node gets one integer whose interval contains exactly the intervals of
its descendants (equal intervals are told apart by level in the decoder).

Recursion, driven by an explicit work stack:
- forest at level k, interval I: trees take consecutive slices of size
  floor(c_k |T|) from the left of I; what is left at the right stays unused.
- tree of one node: the point triplet (0, a, 0) where I = [a, .).
- tree with |T| <= 2^(k-1): drop to level ceil(log2 |T|) on a prefix of I.
- otherwise: the spine (separator up to the root) is labeled at level k
  with nested intervals, and each hanging forest F_i recurses at level k-1
  inside its own block I_i.
"""

import logging
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import anclab.core.logger  # noqa: F401
from anclab.core.errors import ParamError, SchemeAssertionError, check
from anclab.models.label_models import LabelStats
from anclab.services.scheme.forest import Forest, spine_decompose
from anclab.services.scheme.params import (
    IntInterval,
    ParamTable,
    Triplet,
    decode_triplet,
    floor_c,
    in_Uk,
)

logger = logging.getLogger('ANCLAB.Marker')

# on_assign(node, triplet, interval of the call, level of the call)
AssignHook = Callable[[int, Triplet, IntInterval, int], None]

_FOREST = 0
_TREE = 1


class Labeling:
    """Labels produced by one marker run; labels[v] and depths[v] for v in 1..n."""

    __slots__ = ("params", "labels", "depths")

    def __init__(self, params: ParamTable, labels: Sequence[int], depths: Sequence[int]):
        self.params = params
        self.labels = tuple(labels)
        self.depths = tuple(depths)

    def __len__(self) -> int:
        return len(self.labels) - 1

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def items(self) -> Iterator[Tuple[int, int]]:
        for v in range(1, len(self.labels)):
            yield v, self.labels[v]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.items())


# ============================================================
# EMBEDDER
# ============================================================

class _Embedder:
    """
    Work-stack implementation of the recursive embedding.

    Stack entries are (kind, item, lo, hi, k) with plain ints; Triplet and
    IntInterval objects are only built when check_uk or on_assign asks for
    them.
    """

    def __init__(self, P: ParamTable, F: Forest, check_uk: bool = False,
                 on_assign: Optional[AssignHook] = None):
        self.P = P
        self.F = F
        self.check_uk = check_uk
        self.on_assign = on_assign
        self.labels: List[int] = [0] * (F.node_count + 1)
        self.stack: List[Tuple[int, object, int, int, int]] = []
        # c_k as (numerator, denominator), indexed by level
        self.c_num = [c.numerator for c in P.c]
        self.c_den = [c.denominator for c in P.c]

    def _report(self, v: int, t: Triplet, lo: int, hi: int, k: int) -> None:
        I = IntInterval(lo, hi)
        if self.check_uk:
            check(in_Uk(self.P, t, I, k), f"node {v}: {tuple(t)} not in U_{k}([{lo}, {hi}))")
        if self.on_assign is not None:
            self.on_assign(v, t, I, k)

    def push_forest(self, roots: Sequence[int], I: IntInterval, k: int) -> None:
        self.stack.append((_FOREST, roots, I.lo, I.hi, k))

    def push_tree(self, root: int, I: IntInterval, k: int) -> None:
        self.stack.append((_TREE, root, I.lo, I.hi, k))

    def run(self) -> None:
        P, F = self.P, self.F
        size, labels, stack = F.size, self.labels, self.stack
        c_num, c_den = self.c_num, self.c_den
        x_of, H_of, J_of, Gamma = P.x, P.H, P.J, P.Gamma
        gamma_0, d = P.gamma_0, P.d
        check_uk = self.check_uk
        report = check_uk or self.on_assign is not None

        while stack:
            kind, item, lo, hi, k = stack.pop()

            if kind == _FOREST:
                num, den = c_num[k], c_den[k]
                a = lo
                slices = []
                for r in item:
                    s = (num * size[r]) // den
                    slices.append((_TREE, r, a, a + s, k))
                    a += s
                if a > hi:
                    raise SchemeAssertionError(f"forest slices end at {a} beyond [{lo}, {hi})")
                # reversed so trees are processed left to right
                slices.reverse()
                stack.extend(slices)
                continue

            root = item
            m = size[root]
            if check_uk:
                check(m <= 1 << k, f"tree of {m} nodes at level {k}")
                check(hi - lo == (c_num[k] * m) // c_den[k],
                      f"tree of {m} nodes at level {k} got interval of size {hi - lo}")

            if m == 1:
                if not 1 <= lo < gamma_0:
                    raise SchemeAssertionError(f"point {lo} of node {root} outside [1, {gamma_0})")
                labels[root] = lo
                if report:
                    self._report(root, Triplet(0, lo, 0), lo, hi, k)
                continue

            if 2 * m <= 1 << k:
                # shrink straight to the smallest level that holds the tree
                k2 = (m - 1).bit_length()
                stack.append((_TREE, root, lo, lo + (c_num[k2] * m) // c_den[k2], k2))
                continue

            # spine at level k, hanging forests at level k - 1
            dec = spine_decompose(F, root)
            if len(dec.spine) >= d:
                raise SchemeAssertionError(f"spine of length {len(dec.spine)} under depth bound {d}")
            x, H_k, J_k = x_of[k - 1], H_of[k - 1], J_of[k - 1]
            num, den = c_num[k - 1], c_den[k - 1]
            h1 = -(-lo // x)
            if h1 >= H_k:
                raise SchemeAssertionError(f"h_1 = {h1} not below H_{k} = {H_k}")

            base = Gamma[k - 1] + h1 * J_k
            h = h1
            h_hat = 0
            blocks = []
            for v, hanging in zip(dec.spine, dec.hanging):
                if hanging:
                    total = 0
                    for c in hanging:
                        total += size[c]
                    need = (num * total) // den
                    h_bar = max(1, -(-need // x))
                    blocks.append((_FOREST, hanging, h * x, h * x + need, k - 1))
                else:
                    h_bar = 1
                h_hat += h_bar
                if h_hat >= J_k:
                    raise SchemeAssertionError(f"h_hat = {h_hat} not below J_{k} = {J_k}")
                labels[v] = base + h_hat
                if report:
                    self._report(v, Triplet(k, h1, h_hat), lo, hi, k)
                h += h_bar

            if h1 * x < lo or h * x > hi:
                raise SchemeAssertionError(f"spine blocks [{h1 * x}, {h * x}) escape [{lo}, {hi})")
            blocks.reverse()
            stack.extend(blocks)


# ============================================================
# PUBLIC OPERATIONS
# ============================================================

def _partial(emb: _Embedder) -> Dict[int, int]:
    return {v: nu for v, nu in enumerate(emb.labels) if nu}


def embed_forest(P: ParamTable, F: Forest, roots: Sequence[int], I: IntInterval, k: int,
                 check_uk: bool = False, on_assign: Optional[AssignHook] = None) -> Dict[int, int]:
    """Embed the subtrees rooted at roots into U_k(I); returns node -> label."""
    if not 0 <= k <= P.K:
        raise ParamError(f"Level {k} outside [0, {P.K}]")
    emb = _Embedder(P, F, check_uk, on_assign)
    emb.push_forest(tuple(roots), I, k)
    emb.run()
    return _partial(emb)


def embed_tree(P: ParamTable, F: Forest, root: int, I: IntInterval, k: int,
               check_uk: bool = False, on_assign: Optional[AssignHook] = None) -> Dict[int, int]:
    """Embed the subtree rooted at root into U_k(I); |I| must be floor(c_k |T|) (checked under check_uk)."""
    if not 0 <= k <= P.K:
        raise ParamError(f"Level {k} outside [0, {P.K}]")
    emb = _Embedder(P, F, check_uk, on_assign)
    emb.push_tree(root, I, k)
    emb.run()
    return _partial(emb)


def label_forest(P: ParamTable, F: Forest, check_uk: bool = False,
                 on_assign: Optional[AssignHook] = None) -> Labeling:
    """
    Label every node of F, a member of F(n, d) for the table P.

    The whole forest goes into [1, 1 + floor(c_K |F|)) at level K, which fits
    below Gamma_0 = 3 n' because c_K < 3. check_uk verifies every assigned
    triplet against the interval and level of the call that produced it.

    Raises:
        ParamError: F has more nodes or more depth than P allows
        SchemeAssertionError: an internal bound failed (a bug)
    """
    if F.node_count > P.n_input:
        raise ParamError(f"Forest of {F.node_count} nodes exceeds n = {P.n_input}")
    if F.max_depth > P.d:
        raise ParamError(f"Forest depth {F.max_depth} exceeds d = {P.d}")

    emb = _Embedder(P, F, check_uk, on_assign)
    I = IntInterval(1, 1 + floor_c(P, P.K, F.node_count))
    check(I.hi <= P.gamma_0, f"top interval [{I.lo}, {I.hi}) exceeds Gamma_0 = {P.gamma_0}")
    emb.push_forest(F.roots, I, P.K)
    emb.run()

    labels = emb.labels
    check(all(labels[1:]), "some node left unlabeled")
    logger.debug(f"Labeled {F!r} under n'={P.n_pow2}, d={P.d}")
    return Labeling(P, labels, F.depth)


def label_stats(labeling: Labeling) -> LabelStats:
    """Largest label bit length actually used and how many nodes sit on each level."""
    P = labeling.params
    histogram: Dict[int, int] = {}
    top = 0
    for _, nu in labeling.items():
        level = decode_triplet(P, nu).level
        histogram[level] = histogram.get(level, 0) + 1
        top = max(top, nu)
    return LabelStats(
        node_count=len(labeling),
        max_bits=top.bit_length(),
        level_histogram=dict(sorted(histogram.items())),
    )
