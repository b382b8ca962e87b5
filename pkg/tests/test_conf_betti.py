from fractions import Fraction as F

import pytest

from betticount.chars import CharPoly, LambdaSpec, builtin_rep, parse_rep
from betticount.conf_betti import (
    betti_table,
    difference_series,
    generating_series,
    gl_crosscheck,
    recurrence,
    stability_report,
    stable_betti_numbers,
    stable_generating_function,
)
from betticount.conf_counts import bruteforce_weighted_count
from betticount.series import Laurent, RationalFunction, Poly, taylor_coeffs

# Golden grids, entered row by row exactly as printed; keys are (i, n).
# Blank cells (outside the cohomological support) are simply absent.

V11_TABLE = {}
for n, vals in {
    3: {0: 0, 1: 0, 2: 0},
    4: {0: 0, 1: 0, 2: 1, 3: 1},
    5: {0: 0, 1: 0, 2: 2, 3: 3, 4: 1},
    6: {0: 0, 1: 0, 2: 2, 3: 5, 4: 4, 5: 1},
    7: {0: 0, 1: 0, 2: 2, 3: 5, 4: 6, 5: 5, 6: 2},
    8: {0: 0, 1: 0, 2: 2, 3: 5, 4: 6, 5: 7, 6: 7, 7: 3},
    9: {0: 0, 1: 0, 2: 2, 3: 5, 4: 6, 5: 7, 6: 10, 7: 9, 8: 3},
    10: {0: 0, 1: 0, 2: 2, 3: 5, 4: 6, 5: 7, 6: 10, 7: 13, 8: 10, 9: 3},
    11: {0: 0, 1: 0, 2: 2, 3: 5, 4: 6, 5: 7, 6: 10, 7: 13, 8: 14, 9: 11, 10: 4},
    12: {0: 0, 1: 0, 2: 2, 3: 5, 4: 6, 5: 7, 6: 10, 7: 13, 8: 14, 9: 15, 10: 13, 11: 5},
    13: {0: 0, 1: 0, 2: 2, 3: 5, 4: 6, 5: 7, 6: 10, 7: 13, 8: 14, 9: 15, 10: 18, 11: 15, 12: 5},
    14: {0: 0, 1: 0, 2: 2, 3: 5, 4: 6, 5: 7, 6: 10, 7: 13, 8: 14, 9: 15, 10: 18, 11: 21, 12: 16, 13: 5},
}.items():
    for i, v in vals.items():
        V11_TABLE[(i, n)] = v

V2_TABLE = {}
for n, vals in {
    4: {0: 0, 1: 1, 2: 1, 3: 0},
    5: {0: 0, 1: 1, 2: 2, 3: 2, 4: 1},
    6: {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, 5: 2},
    7: {0: 0, 1: 1, 2: 2, 3: 3, 4: 6, 5: 6, 6: 2},
    8: {0: 0, 1: 1, 2: 2, 3: 3, 4: 6, 5: 9, 6: 7, 7: 2},
    9: {0: 0, 1: 1, 2: 2, 3: 3, 4: 6, 5: 9, 6: 10, 7: 8, 8: 3},
    10: {0: 0, 1: 1, 2: 2, 3: 3, 4: 6, 5: 9, 6: 10, 7: 11, 8: 10, 9: 4},
    11: {0: 0, 1: 1, 2: 2, 3: 3, 4: 6, 5: 9, 6: 10, 7: 11, 8: 14, 9: 12, 10: 4},
    12: {0: 0, 1: 1, 2: 2, 3: 3, 4: 6, 5: 9, 6: 10, 7: 11, 8: 14, 9: 17, 10: 13, 11: 4},
    13: {0: 0, 1: 1, 2: 2, 3: 3, 4: 6, 5: 9, 6: 10, 7: 11, 8: 14, 9: 17, 10: 18, 11: 14, 12: 5},
    14: {0: 0, 1: 1, 2: 2, 3: 3, 4: 6, 5: 9, 6: 10, 7: 11, 8: 14, 9: 17, 10: 18, 11: 19, 12: 16, 13: 6},
}.items():
    for i, v in vals.items():
        V2_TABLE[(i, n)] = v


LAMBDA_SWEEP_6 = [
    LambdaSpec(tuple(ent))
    for ent in [
        (), (1,), (2,), (3,), (4,), (5,), (6,),
        (0, 1), (1, 1), (2, 1), (4, 1), (0, 2), (2, 2), (0, 3),
        (0, 0, 1), (1, 0, 1), (3, 0, 1), (0, 0, 2),
        (0, 0, 0, 1), (2, 0, 0, 1), (0, 1, 0, 1),
        (0, 0, 0, 0, 1), (1, 0, 0, 0, 1), (0, 0, 0, 0, 0, 1),
    ]
]
assert all(l.weight <= 6 for l in LAMBDA_SWEEP_6)


# ---------------------------------------------------------------------------
# the generating series itself


def test_trivial_weight_series():
    # (1 - z t^2)/(1 - t): z^0 coefficient 1 for all n, z^1 coefficient -1
    # from n = 2 on
    phi = generating_series(LambdaSpec.of(), 6, 8)
    for n in range(9):
        assert phi.coefficient(0, n) == 1
        assert phi.coefficient(1, n) == (-1 if n >= 2 else 0)


def test_t0_coefficient():
    assert generating_series(LambdaSpec.of(), 4, 4).coeff(0) == Laurent({0: 1})
    for lam in (LambdaSpec.of(1), LambdaSpec.of(0, 1), LambdaSpec.of(2)):
        assert generating_series(lam, 4, 4).coeff(0).is_zero()


def test_standard_rep_series_matches_printed_expansion():
    # combination for V1 = X1 - 1: (-z + z^2) t^3 + (-z + 2z^2 - z^3) t^4
    # + (-z + 2z^2 - 2z^3 + z^4) t^5
    phi1 = generating_series(LambdaSpec.of(1), 8, 8)
    phi0 = generating_series(LambdaSpec.of(), 8, 8)
    combo = phi1 + (-phi0)
    assert combo.coeff(3) == Laurent({1: -1, 2: 1})
    assert combo.coeff(4) == Laurent({1: -1, 2: 2, 3: -1})
    assert combo.coeff(5) == Laurent({1: -1, 2: 2, 3: -2, 4: 1})


def test_series_addition_matches_per_term_recomputation():
    a = generating_series(LambdaSpec.of(1), 6, 8)
    b = generating_series(LambdaSpec.of(), 6, 8)
    s = a + b
    for n in range(9):
        recomputed = (a.coeff(n) + b.coeff(n)).truncated(s.z_floor, s.z_ceil)
        assert s.coeff(n) == recomputed


@pytest.mark.parametrize("lam", LAMBDA_SWEEP_6)
def test_no_negative_powers_survive(lam):
    phi = generating_series(lam, 12, 14)
    for n in range(15):
        low = phi.coeff(n).min_exp()
        assert low is None or low >= 0


@pytest.mark.parametrize("lam", LAMBDA_SWEEP_6)
def test_slope_bound(lam):
    series = difference_series(lam, 12, 14)
    for z_exp, t_exp, _ in series.support():
        assert t_exp - z_exp <= lam.weight + 1


# ---------------------------------------------------------------------------
# tables


def test_v11_golden_table():
    table = betti_table(builtin_rep("V11"), 13, 14)
    for (i, n), v in V11_TABLE.items():
        assert table.entry(i, n) == v, (i, n)


def test_v2_golden_table():
    table = betti_table(builtin_rep("V2"), 13, 14)
    for (i, n), v in V2_TABLE.items():
        assert table.entry(i, n) == v, (i, n)


def test_v1_case_formula():
    table = betti_table(builtin_rep("V1"), 13, 14)
    for n in range(3, 13):
        for i in range(n):
            if i == 0:
                expected = 0
            elif i == n - 1:
                expected = 1
            elif i == 1:
                expected = 1
            else:
                expected = 2
            assert table.entry(i, n) == expected, (i, n)


def test_entries_vanish_beyond_cohomological_dimension():
    for rep in ("V1", "V11", "V2"):
        table = betti_table(builtin_rep(rep), 10, 11)
        for n in range(12):
            for i in range(max(n, 1), 11):
                assert table.entry(i, n) == 0


def test_tables_of_genuine_reps_are_nonnegative_integral():
    # each builtin is an honest representation from some n on (V1 needs
    # n >= 2, V11 n >= 3, V2 n >= 4); below that the character polynomial
    # is merely virtual and the boundary value can dip negative
    for rep, n_min in (("V1", 2), ("V11", 3), ("V2", 4)):
        table = betti_table(builtin_rep(rep), 13, 14)
        for i in range(14):
            for n in range(15):
                v = table.entry(i, n)
                assert v.denominator == 1
                if n >= n_min:
                    assert v >= 0, (rep, i, n)


def test_standard_rep_boundary_value():
    # X1 - 1 evaluates to -1 on the empty cycle type, so alpha_0(0) = -1;
    # this matches the point count: the single empty configuration has
    # weight -1 = q^0 * (-1)
    assert betti_table(builtin_rep("V1"), 2, 2).entry(0, 0) == -1
    assert gl_crosscheck(builtin_rep("V1"), 3, 0).equal


def test_trivial_rep_table():
    table = betti_table(CharPoly.constant(1), 2, 5)
    for n in range(6):
        assert table.entry(0, n) == 1
        assert table.entry(1, n) == (1 if n >= 2 else 0)


def test_empty_configuration_entry():
    assert betti_table(builtin_rep("V11"), 2, 2).entry(0, 0) == 1


# ---------------------------------------------------------------------------
# stable values and recurrences


def test_stable_gf_trivial():
    assert stable_generating_function(LambdaSpec.of()) == RationalFunction(
        Poly((1, -1))
    )


def test_stable_gf_single_cycle():
    got = stable_generating_function(LambdaSpec.of(1))
    assert got == RationalFunction(Poly((1, -1)), Poly((1, 1)))


def test_stable_v1_values():
    vals = stable_betti_numbers(builtin_rep("V1"), 12)
    assert vals[0] == 0 and vals[1] == 1
    assert all(v == 2 for v in vals[2:])


def test_stable_v11_series_matches_printed():
    signed = taylor_coeffs(
        sum(
            (
                stable_generating_function(lam) * c
                for lam, c in builtin_rep("V11").items()
            ),
            RationalFunction(Poly(())),
        ),
        11,
    )
    assert signed == [0, 0, 2, -5, 6, -7, 10, -13, 14, -15, 18, -21]


def test_recurrence_coefficients():
    for rep in ("V11", "V2"):
        spec = recurrence(builtin_rep(rep))
        assert spec.coefficients == (2, -2, 2, -1)
    spec1 = recurrence(builtin_rep("V1"))
    assert spec1.coefficients == (1,)
    assert spec1.valid_from <= 3


def test_recurrence_holds_on_stable_sequence():
    for rep in ("V1", "V11", "V2"):
        p = builtin_rep(rep)
        spec = recurrence(p)
        vals = stable_betti_numbers(p, 40)
        assert spec.holds_on(vals)


def test_stable_closed_forms_mod_four():
    v11 = stable_betti_numbers(builtin_rep("V11"), 50)
    for i in range(3, 51):
        expected = {0: 2 * i - 2, 1: 2 * i - 3, 2: 2 * i - 2, 3: 2 * i - 1}[i % 4]
        assert v11[i] == expected
    v2 = stable_betti_numbers(builtin_rep("V2"), 50)
    for i in range(1, 51):
        expected = {0: 2 * i - 2, 1: 2 * i - 1, 2: 2 * i - 2, 3: 2 * i - 3}[i % 4]
        assert v2[i] == expected


def test_table_rows_reach_stable_values():
    for rep in ("V1", "V11", "V2"):
        p = builtin_rep(rep)
        table = betti_table(p, 8, 14)
        stable = stable_betti_numbers(p, 8)
        deg = p.degree()
        for i in range(9):
            for n in range(i + deg + 1, 15):
                assert table.entry(i, n) == stable[i], (rep, i, n)


# ---------------------------------------------------------------------------
# stability ranges


def test_stability_report_bounds_hold():
    for rep in ("V1", "V11", "V2"):
        report = stability_report(builtin_rep(rep), 8, 14)
        assert report.all_stable


def test_stability_sharpness():
    for rep in ("V11", "V2"):
        table = betti_table(builtin_rep(rep), 8, 14)
        for i in range(2, 9):
            assert table.entry(i, i + 2) != table.entry(i, i + 3), (rep, i)


def test_v11_first_stable_row2():
    report = stability_report(builtin_rep("V11"), 4, 14)
    row = report.rows[2]
    assert row.first_stable_n == 5
    table = betti_table(builtin_rep("V11"), 4, 14)
    assert table.entry(2, 4) == 1 != table.entry(2, 5) == 2


def test_stability_report_rejects_small_table():
    with pytest.raises(ValueError):
        stability_report(builtin_rep("V11"), 8, 9)


# ---------------------------------------------------------------------------
# Grothendieck-Lefschetz cross-checks


def test_gl_v11_worked_example():
    check = gl_crosscheck(builtin_rep("V11"), 3, 4)
    assert check.lhs == 6 and check.rhs == 6 and check.equal


def test_gl_trivial_count():
    check = gl_crosscheck(CharPoly.constant(1), 3, 2)
    assert check.lhs == 6 and check.equal


def test_gl_standard_rep_vs_bruteforce():
    check = gl_crosscheck(builtin_rep("V1"), 5, 3)
    assert check.equal
    assert check.lhs == bruteforce_weighted_count(5, 3, builtin_rep("V1"))


GL_REPS = ["1", "V1", "V11", "V2", "X2", "C(X1,1)*C(X1,1)"]


@pytest.mark.parametrize("q", [3, 5, 7])
def test_gl_suite(q):
    reps = [parse_rep(r) for r in GL_REPS[:4]] + [
        CharPoly.binom(LambdaSpec.of(0, 1)),
        CharPoly.binom(LambdaSpec.of(1, 1)),
    ]
    for rep in reps:
        for n in range(7):
            assert gl_crosscheck(rep, q, n).equal, (rep, q, n)
