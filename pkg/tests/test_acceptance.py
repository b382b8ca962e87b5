"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every comparison is exact (rationals); the only tolerance anywhere is the
documented 1e-6 decimal comparison of criterion 8, and the runtime budgets.
Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import json
import time
from fractions import Fraction as F

from betticount.chars import CharPoly, LambdaSpec, builtin_rep, partitions
from betticount.cli import main as cli_main
from betticount.conf_betti import (
    betti_table,
    difference_series,
    generating_series,
    gl_crosscheck,
    recurrence,
    stable_betti_numbers,
)
from betticount.conf_counts import (
    bruteforce_weighted_count,
    limit_expectation,
    limit_normalized,
    partition_weighted_count,
    weighted_count_series,
)
from betticount import tori
from betticount.zeta import builtin_variety

from test_conf_betti import V2_TABLE, V11_TABLE


def report(num, description, ok):
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {description}")
    assert ok, f"criterion {num}: {description}"


def cli_table_cells(rep, max_i, max_n, capsys):
    code = cli_main(
        ["conf-betti", "--rep", rep, "--max-i", str(max_i), "--max-n", str(max_n),
         "--format", "json"]
    )
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    return {(r["i"], r["n"]): F(r["value"]) for r in doc["data"]}


def test_criterion_01_v11_golden_table(capsys):
    start = time.monotonic()
    cells = cli_table_cells("V11", 13, 14, capsys)
    elapsed = time.monotonic() - start
    exact = all(cells[(i, n)] == v for (i, n), v in V11_TABLE.items())
    spot = (
        cells[(2, 5)] == 2
        and cells[(3, 6)] == 5
        and cells[(6, 9)] == 10
        and cells[(11, 14)] == 21
    )
    with capsys.disabled():
        report(1, f"V(1,1) golden table, exact, {elapsed:.2f}s < 10s",
               exact and spot and elapsed < 10)


def test_criterion_02_v2_golden_table(capsys):
    start = time.monotonic()
    cells = cli_table_cells("V2", 13, 14, capsys)
    elapsed = time.monotonic() - start
    exact = all(cells[(i, n)] == v for (i, n), v in V2_TABLE.items())
    spot = cells[(1, 4)] == 1 and cells[(5, 8)] == 9 and cells[(9, 12)] == 17
    with capsys.disabled():
        report(2, f"V(2) golden table, exact, {elapsed:.2f}s < 10s",
               exact and spot and elapsed < 10)


def test_criterion_03_v1_case_formula():
    table = betti_table(builtin_rep("V1"), 12, 13)
    ok = True
    for n in range(3, 13):
        for i in range(n):
            if i == 0:
                want = 0
            elif i == n - 1 or i == 1:
                want = 1
            else:
                want = 2
            ok = ok and table.entry(i, n) == want
    report(3, "V(1) case formula for 3 <= n <= 12, exact", ok)


def test_criterion_04_stable_recurrences_and_closed_forms():
    ok = True
    for rep in ("V11", "V2"):
        ok = ok and recurrence(builtin_rep(rep)).coefficients == (2, -2, 2, -1)
    v11 = stable_betti_numbers(builtin_rep("V11"), 50)
    for i in range(3, 51):
        want = {0: 2 * i - 2, 1: 2 * i - 3, 2: 2 * i - 2, 3: 2 * i - 1}[i % 4]
        ok = ok and v11[i] == want
    v2 = stable_betti_numbers(builtin_rep("V2"), 50)
    for i in range(1, 51):
        want = {0: 2 * i - 2, 1: 2 * i - 1, 2: 2 * i - 2, 3: 2 * i - 3}[i % 4]
        ok = ok and v2[i] == want
    report(4, "stable recurrences (2,-2,2,-1) and mod-4 closed forms to i=50", ok)


def test_criterion_05_stability_bound_and_sharpness():
    ok = True
    for rep in ("V1", "V11", "V2"):
        p = builtin_rep(rep)
        deg = p.degree()
        table = betti_table(p, 8, 14)
        for i in range(9):
            for n in range(i + deg + 1, 14):
                ok = ok and table.entry(i, n) == table.entry(i, n + 1)
    for rep in ("V11", "V2"):
        table = betti_table(builtin_rep(rep), 8, 14)
        for i in range(2, 9):
            ok = ok and table.entry(i, i + 2) != table.entry(i, i + 3)
    report(5, "stability for n >= i+deg+1 and sharpness at n = i+2 vs i+3", ok)


def test_criterion_06_gl_conf_suite():
    start = time.monotonic()
    reps = [CharPoly.constant(1), builtin_rep("V1"), builtin_rep("V11"), builtin_rep("V2")]
    ok = True
    for q in (3, 5, 7):
        for rep in reps:
            for n in range(7):
                check = gl_crosscheck(rep, q, n)
                brute = bruteforce_weighted_count(q, n, rep)
                ok = ok and brute == check.lhs == check.rhs
    elapsed = time.monotonic() - start
    report(6, f"Grothendieck-Lefschetz conf suite, exact, {elapsed:.1f}s < 60s",
           ok and elapsed < 60)


def test_criterion_07_three_path_oracle_equivalence():
    lams = [LambdaSpec(e) for e in ((), (1,), (2,), (0, 1), (1, 1))]
    ok = True
    for p in (3, 5):
        v = builtin_variety("affine", 1, p)
        for lam in lams:
            rep = CharPoly.binom(lam)
            series = weighted_count_series(v, lam, 6)
            for n in range(7):
                a = series[n]
                b = partition_weighted_count(v, rep, n)
                c = bruteforce_weighted_count(p, n, rep)
                ok = ok and a == b == c
    report(7, "three-path oracle equivalence on the affine line, exact", ok)


def test_criterion_08_limits():
    a1_q3 = builtin_variety("affine", 1, 3)
    a1_q2 = builtin_variety("affine", 1, 2)
    ok = limit_normalized(a1_q3, LambdaSpec(())) == F(2, 3)
    ok = ok and limit_expectation(a1_q3, LambdaSpec((1,))) == F(3, 4)
    ok = ok and limit_expectation(a1_q2, LambdaSpec((0, 1))) == F(1, 5)
    p1_q2 = builtin_variety("projective", 1, 2)
    for lam in (LambdaSpec(()), LambdaSpec((1,)), LambdaSpec((0, 1))):
        lim = limit_normalized(p1_q2, lam)
        series = weighted_count_series(p1_q2, lam, 25)
        ok = ok and abs(series[25] / F(2) ** 25 - lim) < F(1, 10**6)
    report(8, "limit values 2/3, 3/4, 1/5 and P^1 agreement at n=25 within 1e-6", ok)


def test_criterion_09_tori_suite():
    start = time.monotonic()
    ok = True
    for q in (2, 3, 5):
        for n in range(8):
            ok = ok and tori.partition_weighted_count(CharPoly.constant(1), q, n) == q ** (n * (n - 1))
    trivial = tori.betti_table(CharPoly.constant(1), 6, 10)
    for n in range(11):
        for i in range(7):
            ok = ok and trivial.entry(i, n) == (1 if i == 0 else 0)
    x1 = tori.betti_table(CharPoly.variable(1), 9, 10)
    for n in range(11):
        for i in range(10):
            ok = ok and x1.entry(i, n) == (1 if i <= n - 1 else 0)
    reps = [CharPoly.constant(1), builtin_rep("V1"), builtin_rep("V11"), builtin_rep("V2")]
    for q in (2, 3, 5):
        for rep in reps:
            for n in range(7):
                ok = ok and tori.gl_crosscheck(rep, q, n).equal
    elapsed = time.monotonic() - start
    report(9, f"tori suite (Steinberg, trivial/X1 rows, GL), exact, {elapsed:.1f}s < 30s",
           ok and elapsed < 30)


def test_criterion_10_cancellation_and_slope():
    lams = [LambdaSpec(mu.counts) for w in range(7) for mu in partitions(w)]
    assert len(lams) == 30
    ok = True
    for lam in lams:
        phi = generating_series(lam, 12, 14)
        for n in range(15):
            low = phi.coeff(n).min_exp()
            ok = ok and (low is None or low >= 0)
        diff = difference_series(lam, 12, 14)
        for z_exp, t_exp, _ in diff.support():
            ok = ok and t_exp - z_exp <= lam.weight + 1
    report(10, "no negative z-powers and slope <= weight+1 for all |lam| <= 6", ok)
