"""Arithmetic data of a variety over a finite field: point-count sequences,
zeta functions, necklace polynomials and the Moebius inversion tying them
together.

The Euler product used here is Z(V,t) = prod_k (1 - t^k)^(-M_k) over the
closed-point counts M_k; expanding it reproduces 1/(1 - q^d t) for affine
d-space, which pins the variable of the product to t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from .series import Poly, RationalFunction, taylor_coeffs, truncated_mul

__all__ = [
    "mobius",
    "divisors",
    "is_prime_power",
    "necklace_poly",
    "PointCountData",
    "closed_point_counts",
    "zeta_series_from_counts",
    "builtin_variety",
    "load_variety_file",
    "parse_variety_text",
]


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    if n == 1:
        return 1
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def necklace_poly(k: int) -> Poly:
    """The k-th necklace polynomial M_k(x) = (1/k) sum_{j|k} mu(k/j) x^j."""
    if k < 1:
        raise ValueError("necklace polynomials are indexed by k >= 1")
    coeffs = [Fraction(0)] * (k + 1)
    for j in divisors(k):
        coeffs[j] = Fraction(mobius(k // j), k)
    return Poly(coeffs)


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    for p in range(2, q + 1):
        if p * p > q:
            return True  # q itself is prime
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


@dataclass(frozen=True)
class PointCountData:
    """A variety's arithmetic over F_q: dimension, and either an exact zeta
    function or a finite point-count sequence |V(F_{q^m})| for m = 1..M.

    Requests that need counts deeper than the supplied data raise instead of
    extrapolating.
    """

    q: int
    dim: int
    zeta: Optional[RationalFunction] = None
    counts: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if not is_prime_power(self.q):
            raise ValueError(f"q = {self.q} is not a prime power")
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if (self.zeta is None) == (self.counts is None):
            raise ValueError("supply exactly one of zeta or counts")
        if self.zeta is not None and self.zeta.den[0] == 0:
            raise ValueError("zeta function must be regular at t = 0")

    def point_counts(self, depth: int) -> list[int]:
        """|V(F_{q^m})| for m = 1..depth."""
        if self.counts is not None:
            if depth > len(self.counts):
                raise ValueError(
                    f"need point counts to depth {depth}, only {len(self.counts)} supplied"
                )
            return list(self.counts[:depth])
        # t Z'/Z = sum_m |V(F_{q^m})| t^m
        logderiv = RationalFunction(Poly((0, 1))) * self.zeta.derivative() / self.zeta
        series = taylor_coeffs(logderiv, depth)
        out = []
        for m in range(1, depth + 1):
            v = series[m]
            if v.denominator != 1 or v < 0:
                raise ValueError(f"zeta function gives invalid count {v} at depth {m}")
            out.append(int(v))
        return out

    def point_count(self, m: int) -> int:
        return self.point_counts(m)[m - 1]


def closed_point_counts(v: PointCountData, depth: int) -> list[int]:
    """M_k(V, q) for k = 1..depth via Moebius inversion of the point counts.

    Each M_k counts closed points of degree k, so a non-integer or negative
    value flags inconsistent user data.
    """
    pts = v.point_counts(depth)
    out = []
    for k in range(1, depth + 1):
        total = sum(mobius(k // m) * pts[m - 1] for m in divisors(k))
        if total % k or total < 0:
            raise ValueError(
                f"Moebius inversion gives non-count M_{k} = {Fraction(total, k)}; "
                "point-count data is inconsistent"
            )
        out.append(total // k)
    return out


def zeta_series_from_counts(v: PointCountData, t_order: int) -> list[Fraction]:
    """Truncated Euler product prod_k (1 - t^k)^(-M_k(V,q)) to the given order."""
    mk = closed_point_counts(v, t_order) if t_order else []
    out = [Fraction(1)] + [Fraction(0)] * t_order
    for k in range(1, t_order + 1):
        m = mk[k - 1]
        if m == 0:
            continue
        # (1 - t^k)^(-m) = sum_j comb(m+j-1, j) t^(kj)
        factor = [Fraction(0)] * (t_order + 1)
        for j in range(0, t_order // k + 1):
            factor[k * j] = Fraction(comb(m + j - 1, j))
        out = truncated_mul(out, factor, t_order)
    return out


def builtin_variety(kind: str, d: int, q: int) -> PointCountData:
    """Affine or projective space of dimension d with its standard zeta
    function: 1/(1 - q^d t), resp. prod_{i=0..d} 1/(1 - q^i t)."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if kind == "affine":
        den = Poly((1, -(q**d)))
    elif kind == "projective":
        den = Poly((1,))
        for i in range(d + 1):
            den = den * Poly((1, -(q**i)))
    else:
        raise ValueError(f"unknown builtin variety kind {kind!r}")
    return PointCountData(q=q, dim=d, zeta=RationalFunction(Poly((1,)), den))


# ---------------------------------------------------------------------------
# the variety file format
#
#   q = 3
#   dim = 1
#   zeta_num = 1          # integer coefficients, ascending degree
#   zeta_den = 1 -3
# or
#   counts = 3 9 27       # |V(F_{q^m})| for m = 1..M
#
# '#' starts a comment; integers only.


def parse_variety_text(text: str) -> PointCountData:
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        if key in fields:
            raise ValueError(f"line {lineno}: duplicate field {key!r}")
        fields[key] = value.strip()

    def int_list(key: str) -> list[int]:
        try:
            return [int(tok) for tok in fields[key].replace(",", " ").split()]
        except ValueError:
            raise ValueError(f"field {key!r} must be a list of integers") from None

    for required in ("q", "dim"):
        if required not in fields:
            raise ValueError(f"missing field {required!r}")
    try:
        q = int(fields["q"])
        dim = int(fields["dim"])
    except ValueError:
        raise ValueError("fields 'q' and 'dim' must be integers") from None

    has_zeta = "zeta_num" in fields or "zeta_den" in fields
    has_counts = "counts" in fields
    if has_zeta == has_counts:
        raise ValueError("supply either zeta_num/zeta_den or counts, not both")
    if has_zeta:
        if not ("zeta_num" in fields and "zeta_den" in fields):
            raise ValueError("zeta_num and zeta_den must both be present")
        num = Poly(int_list("zeta_num"))
        den = Poly(int_list("zeta_den"))
        if den.is_zero():
            raise ValueError("zeta_den is the zero polynomial")
        return PointCountData(q=q, dim=dim, zeta=RationalFunction(num, den))
    counts = int_list("counts")
    if not counts:
        raise ValueError("counts must be non-empty")
    return PointCountData(q=q, dim=dim, counts=tuple(counts))


def load_variety_file(path: str) -> PointCountData:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_variety_text(handle.read())
