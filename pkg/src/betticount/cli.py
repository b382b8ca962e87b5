"""Command-line surface: Betti tables, stable values and recurrences,
weighted point counts and their limits, and the verification suites.

Output is an OutputDocument rendered as a human-readable table, CSV, or
JSON.  Every numeric payload is an exact rational serialized as "p/q"
(plain "p" for integers); no decimals anywhere.  Verification rows are
emitted in deterministic (q, n, rep) order and the exit code is 0 exactly
when every row passes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import conf_betti, conf_counts, tori
from .chars import CharPoly, LambdaSpec, parse_rep
from .conf_counts import DEFAULT_GUARD
from .zeta import PointCountData, builtin_variety, is_prime_power, load_variety_file

MAX_GRID_CONF = 64
MAX_GRID_TORI = 20
MAX_VERIFY_N = 12
THREADS_ENV = "BETTICOUNT_THREADS"


@dataclass
class OutputDocument:
    kind: str  # table | recurrence | verification | limits
    meta: dict = field(default_factory=dict)
    data: list = field(default_factory=list)


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# renderers


def render_json(doc: OutputDocument) -> str:
    return json.dumps({"kind": doc.kind, "meta": doc.meta, "data": doc.data}, indent=2)


def render_csv(doc: OutputDocument) -> str:
    out = io.StringIO()
    for key, value in doc.meta.items():
        out.write(f"# {key}: {json.dumps(value)}\n")
    if doc.data:
        writer = csv.DictWriter(out, fieldnames=list(doc.data[0].keys()))
        writer.writeheader()
        writer.writerows(doc.data)
    return out.getvalue().rstrip("\n")


def _render_grid(doc: OutputDocument) -> str:
    side = doc.meta["side"]
    max_i, max_n = doc.meta["max_i"], doc.meta["max_n"]
    cells = {(row["i"], row["n"]): row["value"] for row in doc.data}
    name = "alpha" if side == "conf" else "beta"
    lines = [f"{name}_i(n) for rep {doc.meta['rep']}"]
    widths = [max(len(str(n)), *(len(cells.get((i, n), "")) for i in range(max_i + 1)))
              for n in range(max_n + 1)]
    header = "  i\\n |" + "".join(f" {str(n).rjust(widths[n])}" for n in range(max_n + 1))
    lines.append(header)
    lines.append("-" * len(header))
    for i in range(max_i + 1):
        row = [f"{i:5d} |"]
        for n in range(max_n + 1):
            row.append(" " + cells.get((i, n), "").rjust(widths[n]))
        lines.append("".join(row))
    if "stable" in doc.meta:
        lines.append(f"stable {name}_i, i = 0..{max_i}: " + " ".join(doc.meta["stable"]))
    if "recurrence" in doc.meta:
        rec = doc.meta["recurrence"]
        terms = " + ".join(
            f"({c})*a_(i-{k})" for k, c in enumerate(rec["coefficients"], start=1)
        )
        lines.append(f"recurrence: a_i = {terms} for i >= {rec['valid_from']}")
    return "\n".join(lines)


def _render_verification(doc: OutputDocument) -> str:
    lines = []
    for note in doc.meta.get("notes", []):
        lines.append(f"note: {note}")
    for row in doc.data:
        status = "PASS" if row["pass"] else "FAIL"
        extra = f" brute={row['brute']}" if "brute" in row else ""
        lines.append(
            f"q={row['q']} n={row['n']} rep={row['rep']}: "
            f"lhs={row['lhs']} rhs={row['rhs']}{extra} {status}"
        )
    total = len(doc.data)
    passed = sum(1 for row in doc.data if row["pass"])
    lines.append(f"{passed}/{total} checks passed")
    return "\n".join(lines)


def render_table(doc: OutputDocument) -> str:
    if doc.kind == "table" and doc.data and "i" in doc.data[0]:
        return _render_grid(doc)
    if doc.kind == "verification":
        return _render_verification(doc)
    if doc.kind == "limits":
        return "\n".join(
            f"{row['weight']}: normalized limit = {row['normalized']}, "
            f"expectation = {row['expectation']}"
            for row in doc.data
        )
    # count series and anything else row-shaped
    lines = []
    for row in doc.data:
        lines.append("  ".join(f"{k}={v}" for k, v in row.items()))
    return "\n".join(lines)


def render(doc: OutputDocument, fmt: str) -> str:
    if fmt == "json":
        return render_json(doc)
    if fmt == "csv":
        return render_csv(doc)
    return render_table(doc)


# ---------------------------------------------------------------------------
# shared argument handling


def _parse_q_list(text: str) -> list[int]:
    try:
        qs = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"--q expects integers, got {text!r}") from None
    if not qs:
        raise ValueError("--q is empty")
    return qs


def _parse_lambda(text: str) -> LambdaSpec:
    try:
        entries = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise ValueError(f"--lambda expects integers, got {text!r}") from None
    return LambdaSpec(entries)


def _parse_variety(spec: str, q: int | None) -> PointCountData:
    kind, _, arg = spec.partition(":")
    if kind in ("affine", "projective"):
        if not arg.isdigit():
            raise ValueError(f"expected {kind}:<dim>, got {spec!r}")
        if q is None:
            raise ValueError("builtin varieties need --q")
        return builtin_variety(kind, int(arg), q)
    if kind == "file":
        v = load_variety_file(arg)
        if q is not None and q != v.q:
            raise ValueError(f"--q {q} conflicts with q = {v.q} from {arg}")
        return v
    raise ValueError(f"unknown variety {spec!r}; use affine:d, projective:d or file:PATH")


def _check_grid(max_i: int, max_n: int, cap: int) -> None:
    if max_i < 0 or max_n < 0:
        raise ValueError("--max-i and --max-n must be nonnegative")
    if max_i > cap or max_n > cap:
        raise ValueError(f"grid bound exceeded: --max-i/--max-n are capped at {cap}")


# ---------------------------------------------------------------------------
# commands


def _betti_doc(side: str, args) -> tuple[OutputDocument, int]:
    cap = MAX_GRID_CONF if side == "conf" else MAX_GRID_TORI
    _check_grid(args.max_i, args.max_n, cap)
    rep = parse_rep(args.rep)
    mod = conf_betti if side == "conf" else tori
    table = mod.betti_table(rep, args.max_i, args.max_n)
    doc = OutputDocument(kind="table")
    doc.meta = {
        "side": side,
        "rep": args.rep,
        "rep_binomial": str(rep),
        "max_i": args.max_i,
        "max_n": args.max_n,
    }
    if args.stable:
        stable = mod.stable_betti_numbers(rep, args.max_i)
        spec = mod.recurrence(rep)
        doc.meta["stable"] = [format_rational(v) for v in stable]
        doc.meta["recurrence"] = {
            "coefficients": [format_rational(c) for c in spec.coefficients],
            "valid_from": spec.valid_from,
        }
    for i in range(args.max_i + 1):
        for n in range(args.max_n + 1):
            if table.in_support(i, n):
                doc.data.append(
                    {"i": i, "n": n, "value": format_rational(table.entry(i, n))}
                )
    return doc, 0


def cmd_conf_betti(args) -> tuple[OutputDocument, int]:
    return _betti_doc("conf", args)


def cmd_tori_betti(args) -> tuple[OutputDocument, int]:
    return _betti_doc("tori", args)


def cmd_count(args) -> tuple[OutputDocument, int]:
    if args.lam is not None and args.rep is not None:
        raise ValueError("give either --rep or --lambda, not both")
    q = None
    if args.q:
        q_list = _parse_q_list(args.q)
        if len(q_list) != 1:
            raise ValueError("count takes a single --q")
        q = q_list[0]
    v = _parse_variety(args.variety, q)
    if args.lam is not None:
        lam = _parse_lambda(args.lam)
        rep = CharPoly.binom(lam)
        weight_desc = f"lambda=({args.lam})"
    else:
        rep = parse_rep(args.rep if args.rep is not None else "1")
        weight_desc = f"rep={rep}"
    meta = {
        "variety": args.variety,
        "q": v.q,
        "dim": v.dim,
        "weight": weight_desc,
        "max_n": args.max_n,
    }
    if args.limits:
        base = conf_counts.limit_normalized(v, LambdaSpec(()))
        normalized = Fraction(0)
        for lam_term, coeff in rep.items():
            normalized += coeff * conf_counts.limit_normalized(v, lam_term)
        doc = OutputDocument(kind="limits", meta=meta)
        doc.data.append(
            {
                "weight": weight_desc,
                "normalized": format_rational(normalized),
                "expectation": format_rational(normalized / base),
            }
        )
        return doc, 0
    if args.max_n > 200:
        raise ValueError("--max-n is capped at 200 for count series")
    values = [Fraction(0)] * (args.max_n + 1)
    for lam_term, coeff in rep.items():
        series = conf_counts.weighted_count_series(v, lam_term, args.max_n)
        for n, c in enumerate(series):
            values[n] += coeff * c
    doc = OutputDocument(kind="table", meta=meta)
    doc.data = [
        {"n": n, "value": format_rational(c)} for n, c in enumerate(values)
    ]
    return doc, 0


def _verify_one(side: str, q: int, n: int, name: str, rep: CharPoly, bruteforce: bool, guard: int):
    mod = conf_betti if side == "conf" else tori
    check = mod.gl_crosscheck(rep, q, n)
    ok = check.equal
    row = {
        "q": q,
        "n": n,
        "rep": name,
        "lhs": format_rational(check.lhs),
        "rhs": format_rational(check.rhs),
    }
    if bruteforce:
        brute = conf_counts.bruteforce_weighted_count(q, n, rep, guard)
        row["brute"] = format_rational(brute)
        ok = ok and brute == check.lhs
    row["pass"] = ok
    return row


def cmd_verify(args) -> tuple[OutputDocument, int]:
    side = args.side
    if side not in ("conf", "tori"):
        raise ValueError("--side must be conf or tori")
    if args.bruteforce and side != "conf":
        raise ValueError("--bruteforce applies to the conf side only")
    qs = sorted(set(_parse_q_list(args.q)))
    for q in qs:
        if not is_prime_power(q):
            raise ValueError(f"q = {q} is not a prime power")
    reps = [(tok.strip(), parse_rep(tok)) for tok in args.rep.split(",")]
    if args.bruteforce:
        for q in qs:
            if q ** args.max_n > args.guard:
                raise ValueError(
                    f"brute force at q={q}, n={args.max_n} exceeds the guard "
                    f"{args.guard}; lower --max-n or raise --guard"
                )
    if args.max_n > MAX_VERIFY_N:
        raise ValueError(f"--max-n is capped at {MAX_VERIFY_N} for verify")
    tasks = [
        (q, n, name, rep)
        for q in qs
        for n in range(args.max_n + 1)
        for name, rep in reps
    ]
    workers = int(os.environ.get(THREADS_ENV, "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(
                pool.map(
                    lambda t: _verify_one(side, *t, args.bruteforce, args.guard),
                    tasks,
                )
            )
    else:
        rows = [
            _verify_one(side, q, n, name, rep, args.bruteforce, args.guard)
            for q, n, name, rep in tasks
        ]
    doc = OutputDocument(kind="verification")
    doc.meta = {
        "side": side,
        "q": qs,
        "max_n": args.max_n,
        "reps": [name for name, _ in reps],
        "bruteforce": bool(args.bruteforce),
    }
    notes = []
    if side == "conf" and any(q % 2 == 0 for q in qs):
        notes.append(
            "even q is outside the stated odd-characteristic hypothesis for "
            "weighted configuration counts; results are reported as exploratory"
        )
    if notes:
        doc.meta["notes"] = notes
    doc.data = rows
    all_pass = all(row["pass"] for row in rows)
    return doc, (0 if all_pass else 1)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betticount",
        description=(
            "Exact twisted Betti numbers of configuration spaces and spaces "
            "of maximal tori, with point-counting cross-checks over finite fields."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("table", "csv", "json"), default="table"
        )

    for name, handler in (("conf-betti", cmd_conf_betti), ("tori-betti", cmd_tori_betti)):
        p = sub.add_parser(name, help=f"{name.split('-')[0]} Betti table")
        p.add_argument("--rep", required=True, help="V1, V11, V2, or an expression like 'C(X1,2)-X2'")
        p.add_argument("--max-i", type=int, default=13)
        p.add_argument("--max-n", type=int, default=14)
        p.add_argument("--stable", action="store_true", help="also emit stable values and the recurrence")
        add_format(p)
        p.set_defaults(handler=handler)

    p = sub.add_parser("count", help="weighted point counts on configuration spaces")
    p.add_argument("--variety", required=True, help="affine:d, projective:d, or file:PATH")
    p.add_argument("--q", help="prime power (builtin varieties)")
    p.add_argument("--rep", help="character polynomial weight")
    p.add_argument("--lambda", dest="lam", help="binomial weight, e.g. 1 or 0,1")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--limits", action="store_true", help="emit the n->infinity limits instead of the series")
    add_format(p)
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("verify", help="cross-check point counts against Betti tables")
    p.add_argument("--side", required=True, choices=("conf", "tori"))
    p.add_argument("--q", required=True, help="comma-separated prime powers")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--rep", default="1,V1,V11,V2", help="comma-separated rep names")
    p.add_argument("--bruteforce", action="store_true", help="also enumerate polynomials over F_q (conf side, prime q)")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="brute-force size guard on q^n")
    add_format(p)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.handler(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(doc, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
