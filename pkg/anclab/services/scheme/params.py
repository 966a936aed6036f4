# anclab/services/scheme/params.py
"""
Parameter Tables for the Compact Ancestry Scheme

Computes every (n, d)-dependent constant of the construction with exact
arithmetic and provides the codec between label integers and triplets.

Features:
- c_k as exact Fractions, x_k / H_k / J_k / Gamma_k as Python ints
- Triplet <-> label integer codec (binary search over Gamma)
- Triplet -> half-open integer interval map
- Label bit widths and the numeric size bounds

A label value nu lives in U = [1, Gamma_K). Values below Gamma_0 are level-0
triplets (0, nu, 0) whose interval is the single point [nu, nu + 1). A value
in [Gamma_{i-1}, Gamma_i) is the triplet (i, h, j) with
nu = Gamma_{i-1} + h * J_i + j and interval [x_i * h, x_i * (h + j)).
"""

import math
from bisect import bisect_right
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, NamedTuple, Tuple

from pydantic import BaseModel, ConfigDict

from anclab.core.errors import ParamError, check


# ============================================================
# DOMAIN TYPES
# ============================================================

class Triplet(NamedTuple):
    """Level-indexed label (level, h, j)."""
    level: int
    h: int
    j: int


class IntInterval(NamedTuple):
    """Half-open integer interval [lo, hi)."""
    lo: int
    hi: int

    @property
    def size(self) -> int:
        return self.hi - self.lo

    @property
    def empty(self) -> bool:
        return self.lo == self.hi

    def contains(self, other: "IntInterval") -> bool:
        """True iff other is a subset of self (an empty other lies anywhere)."""
        if other.lo == other.hi:
            return True
        return self.lo <= other.lo and other.hi <= self.hi

    def prefix(self, size: int) -> "IntInterval":
        """The leftmost `size` points of this interval."""
        check(0 <= size <= self.hi - self.lo,
              f"prefix of size {size} does not fit in [{self.lo}, {self.hi})")
        return IntInterval(self.lo, self.lo + size)


class ParamTable(BaseModel):
    """
    All constants of the construction for the family F(n, d).

    x, H and J hold x_1..x_K, H_1..H_K and J_1..J_K (x_0 = 1 is implicit);
    c and Gamma hold levels 0..K.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_input: int
    d: int
    n_pow2: int
    K: int
    c: Tuple[Fraction, ...]
    x: Tuple[int, ...]
    H: Tuple[int, ...]
    J: Tuple[int, ...]
    Gamma: Tuple[int, ...]

    @property
    def gamma_0(self) -> int:
        return self.Gamma[0]

    @property
    def gamma_k(self) -> int:
        """Exclusive upper end of the label space U = [1, Gamma_K)."""
        return self.Gamma[-1]

    def x_of(self, k: int) -> int:
        return 1 if k == 0 else self.x[k - 1]

    def H_of(self, k: int) -> int:
        return self.H[k - 1]

    def J_of(self, k: int) -> int:
        return self.J[k - 1]


# ============================================================
# TABLE CONSTRUCTION
# ============================================================

def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@lru_cache(maxsize=128)
def build_params(n: int, d: int) -> ParamTable:
    """
    Build the exact parameter table for F(n, d).

    n is rounded up to the next power of two. H_k and J_k are the ceilings
    of their (possibly fractional) defining expressions:
        c_0 = 1,  c_k = c_{k-1} + 1/k^2
        x_k = ceil(2^(k-1) / (d k^2))
        H_k = ceil(1 + 3 n d k^2 / 2^(k-1))
        J_k = ceil(2 d c_k k^2)
        Gamma_0 = 3 n,  Gamma_k = Gamma_{k-1} + H_k J_k

    Raises:
        ParamError: n < 1 or d < 1
    """
    if not isinstance(n, int) or n < 1:
        raise ParamError(f"Node count n must be >= 1, got {n}")
    if not isinstance(d, int) or d < 1:
        raise ParamError(f"Depth bound d must be >= 1, got {d}")

    n_pow2 = 1 << (n - 1).bit_length()
    K = n_pow2.bit_length() - 1

    c: List[Fraction] = [Fraction(1)]
    x: List[int] = []
    H: List[int] = []
    J: List[int] = []
    Gamma: List[int] = [3 * n_pow2]

    for k in range(1, K + 1):
        c.append(c[-1] + Fraction(1, k * k))
        half = 1 << (k - 1)
        x.append(_ceil_div(half, d * k * k))
        H.append(1 + _ceil_div(3 * n_pow2 * d * k * k, half))
        J.append(math.ceil(2 * d * c[k] * k * k))
        Gamma.append(Gamma[-1] + H[-1] * J[-1])

    check(c[-1] < 3, f"c_K = {c[-1]} is not below 3")

    return ParamTable(
        n_input=n,
        d=d,
        n_pow2=n_pow2,
        K=K,
        c=tuple(c),
        x=tuple(x),
        H=tuple(H),
        J=tuple(J),
        Gamma=tuple(Gamma),
    )


def floor_c(P: ParamTable, k: int, m: int) -> int:
    """floor(c_k * m), computed on exact rationals."""
    if not 0 <= k <= P.K:
        raise ParamError(f"Level {k} outside [0, {P.K}]")
    ck = P.c[k]
    return (ck.numerator * m) // ck.denominator


# ============================================================
# TRIPLET CODEC
# ============================================================

def validate_triplet(P: ParamTable, t: Triplet) -> None:
    """Raise ParamError unless t is a triplet of U."""
    level, h, j = t
    if level == 0:
        if not (1 <= h < P.gamma_0 and j == 0):
            raise ParamError(f"Level-0 triplet {tuple(t)} outside [1, {P.gamma_0}) x {{0}}")
        return
    if not 1 <= level <= P.K:
        raise ParamError(f"Triplet level {level} outside [0, {P.K}]")
    if not (0 <= h < P.H[level - 1] and 0 <= j < P.J[level - 1]):
        raise ParamError(
            f"Triplet {tuple(t)} outside h in [0, {P.H[level - 1]}), j in [0, {P.J[level - 1]})"
        )


def encode_triplet(P: ParamTable, t: Triplet) -> int:
    """Map a triplet to its label integer nu in [1, Gamma_K)."""
    validate_triplet(P, t)
    level, h, j = t
    if level == 0:
        return h
    return P.Gamma[level - 1] + h * P.J[level - 1] + j


def decode_triplet(P: ParamTable, nu: int) -> Triplet:
    """Inverse of encode_triplet."""
    gamma = P.Gamma
    if not 1 <= nu < gamma[-1]:
        raise ParamError(f"Label {nu} outside [1, {gamma[-1]})")
    if nu < gamma[0]:
        return Triplet(0, nu, 0)
    level = bisect_right(gamma, nu)
    h, j = divmod(nu - gamma[level - 1], P.J[level - 1])
    return Triplet(level, h, j)


def interval_of(P: ParamTable, t: Triplet) -> IntInterval:
    """Interval associated with a triplet; level 0 is the point [h, h + 1)."""
    validate_triplet(P, t)
    level, h, j = t
    if level == 0:
        return IntInterval(h, h + 1)
    x = P.x[level - 1]
    return IntInterval(x * h, x * (h + j))


def label_interval(P: ParamTable, nu: int) -> Tuple[int, int, int]:
    """(level, lo, hi) of a label integer, without building intermediate objects."""
    gamma = P.Gamma
    if not 1 <= nu < gamma[-1]:
        raise ParamError(f"Label {nu} outside [1, {gamma[-1]})")
    if nu < gamma[0]:
        return 0, nu, nu + 1
    level = bisect_right(gamma, nu)
    h, j = divmod(nu - gamma[level - 1], P.J[level - 1])
    x = P.x[level - 1]
    return level, x * h, x * (h + j)


# ============================================================
# U_k(I)
# ============================================================

def in_Uk(P: ParamTable, t: Triplet, I: IntInterval, k: int) -> bool:
    """True iff t has level <= k and its interval lies inside I."""
    if t.level > k:
        return False
    iv = interval_of(P, t)
    if t.level == 0:
        return I.lo <= t.h < I.hi
    return I.contains(iv)


def enumerate_Uk(P: ParamTable, I: IntInterval, k: int) -> Iterator[Triplet]:
    """
    Every triplet of U_k(I). Scans all of U, so small tables only.

    Level >= 1 triplets with j = 0 have an empty interval and are skipped;
    they are never assigned by the marker.
    """
    if not 0 <= k <= P.K:
        raise ParamError(f"Level {k} outside [0, {P.K}]")
    for nu in range(max(I.lo, 1), min(I.hi, P.gamma_0)):
        yield Triplet(0, nu, 0)
    for level in range(1, k + 1):
        x = P.x[level - 1]
        for h in range(P.H[level - 1]):
            for j in range(1, P.J[level - 1]):
                if I.lo <= x * h and x * (h + j) <= I.hi:
                    yield Triplet(level, h, j)


# ============================================================
# LABEL SIZES
# ============================================================

def ancestry_bits(P: ParamTable) -> int:
    """ceil(log2(Gamma_K)): bits for any ancestry label in [1, Gamma_K)."""
    return (P.gamma_k - 1).bit_length()


def adjacency_bits(P: ParamTable) -> int:
    """ceil(log2((Gamma_K - 1) * d)): bits for a packed (nu, depth) label."""
    return ((P.gamma_k - 1) * P.d - 1).bit_length()


def _ceil_log2(v: int) -> int:
    return (v - 1).bit_length()


def size_bound_bits(P: ParamTable, adjacency: bool = False) -> int:
    """
    log n' + 2 log d + 16, with every logarithm rounded up.

    Adjacency labels carry the depth as well and get ceil(log2 d) + 1 more.
    """
    bound = _ceil_log2(P.n_pow2) + 2 * _ceil_log2(P.d) + 16
    if adjacency:
        bound += _ceil_log2(P.d) + 1
    return bound


def gamma_size_bound(P: ParamTable) -> int:
    """Closed-form ceiling on Gamma_K: 5400 n' d^2 + 3 n' + 2 K."""
    return 5400 * P.n_pow2 * P.d * P.d + 3 * P.n_pow2 + 2 * P.K
