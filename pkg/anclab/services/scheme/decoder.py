# anclab/services/scheme/decoder.py
"""
Decoder: ancestry and adjacency from two labels alone

The decoder knows only the family F(n, d), through its parameter table,
never the forest.

Ancestry: u is an ancestor of v iff the interval of v lies inside the
interval of u. Two distinct labels may carry the same interval (a spine
node at level k over a child that shrank to a point or a lower-level spine);
then the label on the higher level is the ancestor.

Adjacency: labels carry the depth too, packed as (nu - 1) * d + (depth - 1).
u and v are adjacent iff one is an ancestor of the other one level up.
"""

from typing import NamedTuple, Tuple

from anclab.core.errors import ParamError
from anclab.services.scheme.params import ParamTable, adjacency_bits, ancestry_bits, label_interval


class AdjLabel(NamedTuple):
    nu: int
    depth: int


def is_ancestor(P: ParamTable, nu_u: int, nu_v: int) -> bool:
    """
    True iff the node labeled nu_u is a strict ancestor of the node labeled nu_v.

    Raises:
        ParamError: a label outside [1, Gamma_K)
    """
    level_u, lo_u, hi_u = label_interval(P, nu_u)
    level_v, lo_v, hi_v = label_interval(P, nu_v)
    if nu_u == nu_v:
        return False
    if lo_u == lo_v and hi_u == hi_v:
        return level_u > level_v
    return lo_u <= lo_v and hi_v <= hi_u


# ============================================================
# ADJACENCY LABELS
# ============================================================

def make_adj_label(P: ParamTable, nu: int, depth: int) -> int:
    """Pack (nu, depth) into one integer in [0, (Gamma_K - 1) * d)."""
    if not 1 <= depth <= P.d:
        raise ParamError(f"Depth {depth} outside [1, {P.d}]")
    if not 1 <= nu < P.gamma_k:
        raise ParamError(f"Label {nu} outside [1, {P.gamma_k})")
    return (nu - 1) * P.d + (depth - 1)


def unpack_adj_label(P: ParamTable, packed: int) -> AdjLabel:
    """Inverse of make_adj_label."""
    if not 0 <= packed < (P.gamma_k - 1) * P.d:
        raise ParamError(f"Adjacency label {packed} outside [0, {(P.gamma_k - 1) * P.d})")
    q, r = divmod(packed, P.d)
    return AdjLabel(q + 1, r + 1)


def is_adjacent(P: ParamTable, a_u: int, a_v: int) -> bool:
    """True iff the two packed labels belong to a parent and its child, in either order."""
    nu_u, depth_u = unpack_adj_label(P, a_u)
    nu_v, depth_v = unpack_adj_label(P, a_v)
    if depth_v == depth_u + 1:
        return is_ancestor(P, nu_u, nu_v)
    if depth_u == depth_v + 1:
        return is_ancestor(P, nu_v, nu_u)
    return False


def label_bits(P: ParamTable) -> Tuple[int, int]:
    """(ancestry bits, adjacency bits): ceil(log2 Gamma_K) and ceil(log2((Gamma_K - 1) d))."""
    return ancestry_bits(P), adjacency_bits(P)
