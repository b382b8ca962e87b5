"""Twisted Betti numbers of spaces of maximal tori in GL_n, and the weighted
counts of Frobenius-stable maximal tori over F_q that cross-check them.

The torus-side double generating function is

    sum_{n,i} beta_i(n) / ((1-z)(1-z^2)...(1-z^n)) * z^i t^n
        = [prod_k (1/lam_k!) (t^k / (k (1 - z^k)))^lam_k]
          * prod_{j>=0} 1/(1 - t z^j)

where beta_i(n) is the dimension of the degree-2i cohomology (odd degrees
vanish).  On the arithmetic side, the count of tori with Frobenius cycle
type mu is |GL_n(F_q)| / (z_mu * prod_k (q^k - 1)^(a_k)), which doubles as
an independent oracle for the series expansion.  The infinite product over
j is truncated at j = z_ceil: factor j only contributes z-exponents >= j.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .chars import CharPoly, CycleType, LambdaSpec, centralizer_order, partitions
from .conf_betti import BettiTable, GLCheck
from .series import (
    BiSeries,
    Laurent,
    Poly,
    RationalFunction,
    RecurrenceSpec,
    recurrence_from_ratfun,
    taylor_coeffs,
)

__all__ = [
    "gl_order",
    "z_lambda",
    "weighted_series",
    "partition_weighted_count",
    "tori_count_by_type",
    "generating_series",
    "betti_table",
    "stable_generating_function",
    "stable_betti_numbers",
    "recurrence",
    "gl_crosscheck",
]


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{i=0..n-1} (q^n - q^i); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def z_lambda(lam: LambdaSpec) -> int:
    """prod_k lam_k! * k^lam_k, the centralizer order of the cycle type lam."""
    out = 1
    for k, lk in lam.active():
        out *= math.factorial(lk) * k**lk
    return out


def weighted_series(lam: LambdaSpec, q: int, n_max: int) -> list[Fraction]:
    """Coefficients c_0..c_{n_max} of the torus-count generating function:
    c_n * |GL_n(F_q)| is the sum of C(X, lam) over the Frobenius cycle types
    of all maximal tori of GL_n(F_q).

    Expanded from (1/z_lam) prod_k (t^k/(q^k - 1))^lam_k times
    prod_{i>=1} 1/(1 - q^(-i) t), whose t^m coefficient is
    q^(-m) / prod_{j=1..m} (1 - q^(-j)).
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    w = lam.weight
    scale = Fraction(1, z_lambda(lam))
    for k, lk in lam.active():
        scale *= Fraction(1, (q**k - 1) ** lk)
    out = [Fraction(0)] * (n_max + 1)
    tail = Fraction(1)  # q^(-m) / prod_{j<=m} (1 - q^(-j)) at m = 0
    for m in range(0, n_max - w + 1):
        if m:
            tail *= Fraction(1, q) / (1 - Fraction(1, q**m))
        out[w + m] = scale * tail
    return out


def partition_weighted_count(p: CharPoly, q: int, n: int) -> Fraction:
    """Independent path: sum over partitions mu of n of N_mu * p(mu), where
    N_mu = |GL_n(F_q)| / (z_mu * prod_k (q^k - 1)^(a_k)) counts the tori
    whose Frobenius permutation has cycle type mu."""
    order = gl_order(n, q)
    total = Fraction(0)
    for mu in partitions(n):
        denom = centralizer_order(mu)
        for k, a in enumerate(mu.counts, start=1):
            denom *= (q**k - 1) ** a
        count = Fraction(order, denom)
        if count.denominator != 1:
            raise ArithmeticError(f"non-integral torus count {count} at {mu.parts()}")
        total += count * p.evaluate(mu)
    return total


def tori_count_by_type(q: int, n: int, mu: CycleType) -> int:
    """Number of Frobenius-stable maximal tori of GL_n(F_q) with the given
    Frobenius cycle type."""
    if mu.n != n:
        raise ValueError(f"cycle type has size {mu.n}, expected {n}")
    denom = centralizer_order(mu)
    for k, a in enumerate(mu.counts, start=1):
        denom *= (q**k - 1) ** a
    count = Fraction(gl_order(n, q), denom)
    if count.denominator != 1:
        raise ArithmeticError(f"non-integral torus count {count} at {mu.parts()}")
    return int(count)


@lru_cache(maxsize=256)
def generating_series(lam: LambdaSpec, max_i: int, t_order: int) -> BiSeries:
    """The torus-side double generating series, exact on z-exponents up to
    max_i and t-orders up to t_order.

    The t^n coefficient is the sum over i of beta_i(n) z^i divided by
    (1-z)(1-z^2)...(1-z^n); callers multiply that q-factorial back in to
    extract Betti numbers.
    """
    if max_i < 0 or t_order < 0:
        raise ValueError("max_i and t_order must be nonnegative")
    w = lam.weight
    # the bracket collapses to (1/z_lam) t^w prod_k (1/(1 - z^k))^lam_k,
    # z_lam = prod_k lam_k! k^lam_k absorbing the 1/(k...) factors
    head = Laurent({0: Fraction(1, z_lambda(lam))})
    acc = BiSeries(
        t_order,
        0,
        max_i,
        [head if n == w else Laurent() for n in range(t_order + 1)],
    )
    for k, lk in lam.active():
        geometric_zk = Laurent({k * j: 1 for j in range(0, max_i // k + 1)})
        factor = BiSeries.from_laurent(geometric_zk, t_order, max_i)
        for _ in range(lk):
            acc = acc * factor
    for j in range(0, max_i + 1):
        # 1/(1 - t z^j); factor j only touches z-exponents >= j
        one_minus_tzj = BiSeries.from_terms(
            {(0, 0): 1, (j, 1): -1}, t_order, 0, max_i
        )
        acc = acc * one_minus_tzj.inverse()
    return acc


def _q_factorial_poly(n: int) -> Laurent:
    out = Laurent({0: 1})
    for j in range(1, n + 1):
        out = out * Laurent({0: 1, j: -1})
    return out


@lru_cache(maxsize=128)
def betti_table(p: CharPoly, max_i: int, max_n: int) -> BettiTable:
    """beta_i(n) = dim of the degree-2i twisted cohomology of the space of
    maximal tori, for i <= max_i and n <= max_n.

    The series is computed with z-ceiling max_i + max_n(max_n+1)/2 so that
    multiplying the t^n coefficient by (1-z)...(1-z^n) is exact up to z^max_i.
    """
    slack = max_n * (max_n + 1) // 2
    ceiling = max_i + slack
    grid = [[Fraction(0)] * (max_n + 1) for _ in range(max_i + 1)]
    qfacts = [_q_factorial_poly(n) for n in range(max_n + 1)]
    for lam, coeff in p.items():
        psi = generating_series(lam, ceiling, max_n)
        for n in range(max_n + 1):
            numerator = psi.coeff(n) * qfacts[n]
            top = n * (n - 1) // 2
            for i in range(max_i + 1):
                c = numerator[i]
                if c:
                    if i > top:
                        raise ArithmeticError(
                            f"nonzero beta beyond i = n(n-1)/2 at i={i}, n={n}"
                        )
                    grid[i][n] += coeff * c
    return BettiTable(
        rep=p,
        kind="tori",
        max_i=max_i,
        max_n=max_n,
        entries=tuple(tuple(r) for r in grid),
    )


def stable_generating_function(lam: LambdaSpec) -> RationalFunction:
    """sum_i beta_i z^i = (1/z_lam) prod_k (1/(1 - z^k))^lam_k exactly."""
    den = Poly((1,))
    for k, lk in lam.active():
        den = den * (1 - Poly((0,) * k + (1,))) ** lk
    return RationalFunction(Poly((Fraction(1, z_lambda(lam)),)), den)


def _stable_gf_char(p: CharPoly) -> RationalFunction:
    total = RationalFunction(Poly(()))
    for lam, coeff in p.items():
        total = total + stable_generating_function(lam) * coeff
    return total


def stable_betti_numbers(p: CharPoly, count: int) -> list[Fraction]:
    """The stable values beta_0, ..., beta_count."""
    return taylor_coeffs(_stable_gf_char(p), count)


def recurrence(p: CharPoly) -> RecurrenceSpec:
    """Linear recurrence satisfied by the stable torus-side Betti numbers."""
    if p.is_zero():
        raise ValueError("zero character polynomial")
    return recurrence_from_ratfun(_stable_gf_char(p))


def gl_crosscheck(p: CharPoly, q: int, n: int) -> GLCheck:
    """Compare the weighted torus count (partition sum) against
    q^(n(n-1)) * sum_i beta_i(n) q^(-i) from the Betti table."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = partition_weighted_count(p, q, n)
    top = n * (n - 1) // 2
    table = betti_table(p, top, n)
    rhs = Fraction(0)
    for i in range(top + 1):
        rhs += table.entry(i, n) * Fraction(1, q**i)
    rhs *= q ** (n * (n - 1))
    return GLCheck(lhs=lhs, rhs=rhs)
