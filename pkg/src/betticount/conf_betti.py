"""Twisted Betti numbers of configuration spaces of the complex line.

The double generating function for a binomial-basis weight C(X, lam) is

    sum_{n,i} alpha_i(n) (-z)^i t^n
        = (1 - z t^2)/(1 - t)
          * prod_k binom(M_k(1/z), lam_k) * ((tz)^k / (1 + (tz)^k))^lam_k

with M_k the k-th necklace polynomial.  The series is stored verbatim (the
coefficient at z^i t^n is (-1)^i alpha_i(n)); the sign is applied only when
extracting tables.  Negative powers of z coming from the necklace binomials
cancel against the (tz)^k numerators; the construction asserts that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chars import CharPoly, LambdaSpec
from .conf_counts import partition_weighted_count
from .series import (
    BiSeries,
    Laurent,
    Poly,
    RationalFunction,
    RecurrenceSpec,
    WindowError,
    binomial,
    recurrence_from_ratfun,
    taylor_coeffs,
)
from .zeta import builtin_variety, necklace_poly

__all__ = [
    "BettiTable",
    "GLCheck",
    "generating_series",
    "difference_series",
    "betti_table",
    "stable_generating_function",
    "stable_betti_numbers",
    "recurrence",
    "StabilityRow",
    "StabilityReport",
    "stability_report",
    "gl_crosscheck",
]


@dataclass(frozen=True)
class BettiTable:
    """A grid of twisted Betti numbers entries[i][n], 0 <= i <= max_i and
    0 <= n <= max_n, for one character polynomial.

    kind is "conf" (alpha_i(n), all cohomological degrees) or "tori"
    (beta_i(n), even degrees 2i only).  Values are exact rationals; genuine
    representations give nonnegative integers, virtual ones need not.
    """

    rep: CharPoly
    kind: str
    max_i: int
    max_n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def entry(self, i: int, n: int) -> Fraction:
        return self.entries[i][n]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def in_support(self, i: int, n: int) -> bool:
        if self.kind == "conf":
            return i <= max(n - 1, 0)
        return i <= n * (n - 1) // 2

    def is_integral_nonnegative(self) -> bool:
        return all(
            v.denominator == 1 and v >= 0 for row in self.entries for v in row
        )


@dataclass(frozen=True)
class GLCheck:
    """One Grothendieck-Lefschetz comparison: a weighted point count (lhs)
    against the q-weighted sum of Betti numbers (rhs), both exact."""

    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def _necklace_in_inverse_z(k: int) -> Laurent:
    """M_k(1/z) as a Laurent polynomial; exponents lie in [-k, -1]."""
    return Laurent({-j: c for j, c in enumerate(necklace_poly(k).coeffs) if c})


def difference_series(lam: LambdaSpec, max_i: int, t_order: int) -> BiSeries:
    """(1 - t) times the Betti generating series for C(X, lam).

    Its coefficient at z^i t^n is (-1)^i (alpha_i(n) - alpha_i(n-1)), so
    every nonzero monomial satisfies the slope bound n - i <= weight + 1,
    which is what makes the stability range explicit.
    """
    w = lam.weight
    ceil = max_i + w
    acc = BiSeries.from_terms({(0, 0): 1, (1, 2): -1}, t_order, 0, ceil)
    for k, lk in lam.active():
        neck = binomial(_necklace_in_inverse_z(k), lk)
        acc = acc * BiSeries.from_laurent(neck, t_order, ceil)
        geom = BiSeries.from_terms({(0, 0): 1, (k, k): 1}, t_order, 0, ceil)
        acc = acc * geom.inverse() ** lk
        acc = acc * BiSeries.from_terms({(k * lk, k * lk): 1}, t_order, k * lk, None)
    return acc


@lru_cache(maxsize=512)
def generating_series(lam: LambdaSpec, max_i: int, t_order: int) -> BiSeries:
    """The Betti generating series for C(X, lam): coefficient of z^i t^n is
    (-1)^i alpha_i(n), exact for i up to max_i and n up to t_order.

    Negative z-powers must cancel in the full product; failure to cancel
    indicates an implementation bug and raises ArithmeticError.  Results are
    cached; every value in play is immutable.
    """
    if max_i < 0 or t_order < 0:
        raise ValueError("max_i and t_order must be nonnegative")
    w = lam.weight
    geom_t = BiSeries.from_terms({(0, 0): 1, (0, 1): -1}, t_order, 0, max_i + w)
    phi = difference_series(lam, max_i, t_order) * geom_t.inverse()
    for n in range(t_order + 1):
        low = phi.coeff(n).min_exp()
        if low is not None and low < 0:
            raise ArithmeticError(
                f"negative z-powers failed to cancel at t^{n} for lam={lam.entries}"
            )
    if phi.z_ceil is not None and phi.z_ceil < max_i:
        raise WindowError(
            f"guaranteed window reaches only z^{phi.z_ceil}, below requested {max_i}"
        )
    return phi


@lru_cache(maxsize=128)
def betti_table(p: CharPoly, max_i: int, max_n: int) -> BettiTable:
    """alpha_i(n) for the character polynomial p on grids i <= max_i,
    n <= max_n."""
    grid = [[Fraction(0)] * (max_n + 1) for _ in range(max_i + 1)]
    for lam, coeff in p.items():
        phi = generating_series(lam, max_i, max_n)
        for n in range(max_n + 1):
            row = phi.coeff(n)
            for i in range(max_i + 1):
                c = row[i]
                if c:
                    grid[i][n] += coeff * (-1) ** i * c
    table = BettiTable(
        rep=p,
        kind="conf",
        max_i=max_i,
        max_n=max_n,
        entries=tuple(tuple(r) for r in grid),
    )
    for i in range(max_i + 1):
        for n in range(max_n + 1):
            if not table.in_support(i, n) and table.entry(i, n):
                raise ArithmeticError(
                    f"nonzero entry outside the cohomological support at i={i}, n={n}"
                )
    return table


def stable_generating_function(lam: LambdaSpec) -> RationalFunction:
    """The stable series sum_i alpha_i (-z)^i as an exact rational function:
    (1 - z) * prod_k binom(M_k(1/z), lam_k) * (z^k / (1 + z^k))^lam_k."""
    den = Poly((1,))
    shift = 0
    neck = Laurent({0: 1})
    for k, lk in lam.active():
        neck = neck * binomial(_necklace_in_inverse_z(k), lk)
        shift += k * lk
        zk = Poly((0,) * k + (1,))
        den = den * (1 + zk) ** lk
    # the z^shift numerator clears every negative necklace exponent
    coeffs = [Fraction(0)] * (shift + max(neck.max_exp() or 0, 0) + 1)
    for e, c in neck.items():
        coeffs[e + shift] = c
    return RationalFunction(Poly((1, -1)) * Poly(coeffs), den)


def _stable_gf_char(p: CharPoly) -> RationalFunction:
    total = RationalFunction(Poly(()))
    for lam, coeff in p.items():
        total = total + stable_generating_function(lam) * coeff
    return total


def stable_betti_numbers(p: CharPoly, count: int) -> list[Fraction]:
    """The stable values alpha_0, ..., alpha_count (unsigned)."""
    unsigned = _stable_gf_char(p).scale_arg(-1)
    return taylor_coeffs(unsigned, count)


def recurrence(p: CharPoly) -> RecurrenceSpec:
    """Linear recurrence satisfied by the stable Betti numbers of p,
    extracted from the rational stable generating function."""
    if p.is_zero():
        raise ValueError("zero character polynomial")
    return recurrence_from_ratfun(_stable_gf_char(p).scale_arg(-1))


@dataclass(frozen=True)
class StabilityRow:
    i: int
    bound_n: int
    stable_within_bound: bool
    first_stable_n: int


@dataclass(frozen=True)
class StabilityReport:
    rep: CharPoly
    rows: tuple[StabilityRow, ...]

    @property
    def all_stable(self) -> bool:
        return all(r.stable_within_bound for r in self.rows)


def stability_report(p: CharPoly, max_i: int, max_n: int) -> StabilityReport:
    """Verify alpha_i(n) = alpha_i(n+1) for n >= i + deg(p) + 1 within the
    grid and report the first n from which each row actually stabilizes."""
    deg = p.degree()
    if max_n < max_i + deg + 2:
        raise ValueError(f"table too small: need max_n >= {max_i + deg + 2}")
    table = betti_table(p, max_i, max_n)
    rows = []
    for i in range(max_i + 1):
        bound = i + deg + 1
        ok = all(
            table.entry(i, n) == table.entry(i, n + 1)
            for n in range(bound, max_n)
        )
        first = max_n
        while first > 0 and table.entry(i, first - 1) == table.entry(i, max_n):
            first -= 1
        rows.append(StabilityRow(i, bound, ok, first))
    return StabilityReport(p, tuple(rows))


def gl_crosscheck(p: CharPoly, q: int, n: int) -> GLCheck:
    """Compare the weighted point count on n-point configurations of the
    affine line over F_q (partition sum) with
    q^n * sum_i (-1)^i alpha_i(n) q^(-i) from the Betti table."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = builtin_variety("affine", 1, q)
    lhs = partition_weighted_count(v, p, n)
    table = betti_table(p, max(n - 1, 0), n)
    rhs = Fraction(0)
    for i in range(table.max_i + 1):
        rhs += (-1) ** i * table.entry(i, n) * Fraction(1, q**i)
    rhs *= q**n
    return GLCheck(lhs=lhs, rhs=rhs)
