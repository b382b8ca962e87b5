"""Cycle types, character polynomials in the binomial basis, and conversions.

A character polynomial is a polynomial in the class functions X_k (number of
k-cycles of a permutation); it defines a class function on every symmetric
group at once.  The canonical internal basis here is the family of products
C(X_1, l_1) * C(X_2, l_2) * ... of binomial coefficients, indexed by the
exponent sequence l = (l_1, ..., l_r); X_k is assigned degree k.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .series import Scalar, _frac

__all__ = [
    "CycleType",
    "LambdaSpec",
    "CharPoly",
    "XPoly",
    "partitions",
    "centralizer_order",
    "monomials_to_binomial",
    "class_function_to_binomial",
    "builtin_rep",
    "parse_char_poly",
    "parse_rep",
]


def _strip(seq: Iterable[int]) -> tuple[int, ...]:
    out = list(seq)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class CycleType:
    """Conjugacy-class data: counts[k-1] is the number of (k)-cycles."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", _strip(self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("cycle counts must be nonnegative")

    @property
    def n(self) -> int:
        return sum(k * c for k, c in enumerate(self.counts, start=1))

    def count(self, k: int) -> int:
        return self.counts[k - 1] if 1 <= k <= len(self.counts) else 0

    @staticmethod
    def from_partition(parts: Iterable[int]) -> CycleType:
        parts = list(parts)
        counts = [0] * (max(parts) if parts else 0)
        for p in parts:
            if p < 1:
                raise ValueError("partition parts must be positive")
            counts[p - 1] += 1
        return CycleType(tuple(counts))

    def parts(self) -> tuple[int, ...]:
        out: list[int] = []
        for k, c in enumerate(self.counts, start=1):
            out.extend([k] * c)
        return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class LambdaSpec:
    """Exponent sequence l = (l_1, ..., l_r) indexing a binomial-basis element;
    its weight sum(k * l_k) is the degree of C(X, l)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", _strip(self.entries))
        if any(e < 0 for e in self.entries):
            raise ValueError("lambda entries must be nonnegative")

    @staticmethod
    def of(*entries: int) -> LambdaSpec:
        return LambdaSpec(tuple(entries))

    @property
    def weight(self) -> int:
        return sum(k * e for k, e in enumerate(self.entries, start=1))

    def get(self, k: int) -> int:
        return self.entries[k - 1] if 1 <= k <= len(self.entries) else 0

    def active(self) -> list[tuple[int, int]]:
        """(k, l_k) pairs with l_k > 0."""
        return [(k, e) for k, e in enumerate(self.entries, start=1) if e]


class CharPoly:
    """A class function in the binomial basis: a finite rational combination
    of C(X, l) terms, with zero coefficients never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[LambdaSpec, Scalar] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[LambdaSpec, Fraction] = {}
        for lam, c in items:
            c = _frac(c)
            if c:
                d[lam] = d.get(lam, Fraction(0)) + c
                if not d[lam]:
                    del d[lam]
        self._terms = d

    @staticmethod
    def binom(lam: Union[LambdaSpec, Sequence[int]]) -> CharPoly:
        if not isinstance(lam, LambdaSpec):
            lam = LambdaSpec(tuple(lam))
        return CharPoly({lam: 1})

    @staticmethod
    def constant(c: Scalar) -> CharPoly:
        return CharPoly({LambdaSpec(()): c})

    @staticmethod
    def variable(k: int) -> CharPoly:
        """X_k itself, i.e. C(X_k, 1)."""
        return CharPoly.binom([0] * (k - 1) + [1])

    def items(self) -> list[tuple[LambdaSpec, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0].weight, kv[0].entries))

    def coefficient(self, lam: LambdaSpec) -> Fraction:
        return self._terms.get(lam, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> CharPoly:
        return CharPoly({l: -c for l, c in self._terms.items()})

    def __add__(self, other: CharPoly) -> CharPoly:
        d = dict(self._terms)
        for l, c in other._terms.items():
            v = d.get(l, Fraction(0)) + c
            if v:
                d[l] = v
            elif l in d:
                del d[l]
        return CharPoly(d)

    def __sub__(self, other: CharPoly) -> CharPoly:
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> CharPoly:
        return CharPoly({l: c * _frac(scalar) for l, c in self._terms.items()})

    __rmul__ = __mul__

    def degree(self) -> int:
        """Largest weight over the terms; X_k counts with degree k."""
        if not self._terms:
            raise ValueError("the zero character polynomial has no degree")
        return max(l.weight for l in self._terms)

    def evaluate(self, c: CycleType) -> Fraction:
        """Value on a conjugacy class: sum of coeff * prod_k C(a_k, l_k)."""
        total = Fraction(0)
        for lam, coeff in self._terms.items():
            v = 1
            for k, lk in lam.active():
                v *= math.comb(c.count(k), lk)
                if v == 0:
                    break
            if v:
                total += coeff * v
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for lam, coeff in self.items():
            factors = []
            for k, lk in lam.active():
                factors.append(f"X{k}" if lk == 1 else f"C(X{k},{lk})")
            body = "*".join(factors) if factors else "1"
            if coeff == 1 and factors:
                term = body
            elif coeff == -1 and factors:
                term = f"-{body}"
            else:
                term = f"{coeff}" if not factors else f"{coeff}*{body}"
            chunks.append(term)
        out = chunks[0]
        for t in chunks[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"CharPoly({self})"


# ---------------------------------------------------------------------------
# partitions and centralizers


def partitions(n: int) -> list[CycleType]:
    """All partitions of n as cycle types, each exactly once."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[CycleType] = []

    def rec(remaining: int, largest: int, acc: list[int]):
        if remaining == 0:
            out.append(CycleType.from_partition(acc))
            return
        for part in range(min(remaining, largest), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def centralizer_order(c: CycleType) -> int:
    """Order of the centralizer of the class in S_n: prod_k k^a_k * a_k!."""
    out = 1
    for k, a in enumerate(c.counts, start=1):
        out *= k**a * math.factorial(a)
    return out


# ---------------------------------------------------------------------------
# the monomial form and conversion to the binomial basis


class XPoly:
    """Polynomial in the variables X_1, X_2, ... in plain monomial form.

    Used as the parsing/conversion intermediate; keys are exponent tuples
    (e_1, ..., e_r) with trailing zeros stripped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[tuple[int, ...], Fraction] = {}
        for mono, c in items:
            c = _frac(c)
            mono = _strip(mono)
            if c:
                d[mono] = d.get(mono, Fraction(0)) + c
                if not d[mono]:
                    del d[mono]
        self._terms = d

    @staticmethod
    def constant(c: Scalar) -> XPoly:
        return XPoly({(): c})

    @staticmethod
    def variable(k: int) -> XPoly:
        return XPoly({tuple([0] * (k - 1) + [1]): 1})

    def items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self._terms == other._terms

    def __neg__(self) -> XPoly:
        return XPoly({m: -c for m, c in self._terms.items()})

    def __add__(self, other: Union[XPoly, Scalar]) -> XPoly:
        if isinstance(other, (int, Fraction)):
            other = XPoly.constant(other)
        d = dict(self._terms)
        for m, c in other._terms.items():
            v = d.get(m, Fraction(0)) + c
            if v:
                d[m] = v
            elif m in d:
                del d[m]
        return XPoly(d)

    __radd__ = __add__

    def __sub__(self, other: Union[XPoly, Scalar]) -> XPoly:
        if isinstance(other, (int, Fraction)):
            other = XPoly.constant(other)
        return self + (-other)

    def __mul__(self, other: Union[XPoly, Scalar]) -> XPoly:
        if isinstance(other, (int, Fraction)):
            return XPoly({m: c * _frac(other) for m, c in self._terms.items()})
        d: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                r = max(len(m1), len(m2))
                m = _strip(
                    (m1[i] if i < len(m1) else 0) + (m2[i] if i < len(m2) else 0)
                    for i in range(r)
                )
                v = d.get(m, Fraction(0)) + c1 * c2
                if v:
                    d[m] = v
                elif m in d:
                    del d[m]
        return XPoly(d)

    __rmul__ = __mul__

    def evaluate(self, c: CycleType) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            v = Fraction(1)
            for k, e in enumerate(mono, start=1):
                if e:
                    v *= Fraction(c.count(k)) ** e
            total += coeff * v
        return total

    def __repr__(self) -> str:
        return f"XPoly({dict(self.items())})"


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def monomials_to_binomial(p: Union[XPoly, Mapping[tuple[int, ...], Scalar]]) -> CharPoly:
    """Rewrite a monomial-form polynomial in the X_k into the binomial basis.

    Per variable, X^e = sum_j S(e, j) * j! * C(X, j) with S the Stirling
    numbers of the second kind; distinct variables distribute freely.
    """
    if not isinstance(p, XPoly):
        p = XPoly(p)
    out: dict[LambdaSpec, Fraction] = {}
    for mono, coeff in p._terms.items():
        # options[i]: weighted choices (j, S(e,j)*j!) for variable i+1
        expanded = [(LambdaSpec(()), coeff)]
        for idx, e in enumerate(mono):
            if e == 0:
                continue
            choices = [
                (j, _stirling2(e, j) * math.factorial(j))
                for j in range(1, e + 1)
                if _stirling2(e, j)
            ]
            nxt = []
            for lam, c in expanded:
                for j, w in choices:
                    ent = list(lam.entries) + [0] * (idx + 1 - len(lam.entries))
                    ent[idx] += j
                    nxt.append((LambdaSpec(tuple(ent)), c * w))
            expanded = nxt
        for lam, c in expanded:
            out[lam] = out.get(lam, Fraction(0)) + c
    return CharPoly(out)


def class_function_to_binomial(
    n: int, values: Mapping[CycleType, Scalar]
) -> CharPoly:
    """The unique binomial-basis combination agreeing with `values` on S_n.

    C(X, a(mu)) is the indicator of the class mu among partitions of n, so
    the answer is simply sum_mu values[mu] * C(X, a(mu)).  Requires a value
    for every partition of n.
    """
    out: dict[LambdaSpec, Fraction] = {}
    for mu in partitions(n):
        if mu not in values:
            raise ValueError(f"missing partition {mu.parts()} of {n}")
        c = _frac(values[mu])
        if c:
            out[LambdaSpec(mu.counts)] = c
    return CharPoly(out)


# ---------------------------------------------------------------------------
# built-in representations


_BUILTINS = {
    # standard representation: X_1 - 1
    "V1": CharPoly({LambdaSpec.of(1): 1, LambdaSpec.of(): -1}),
    # exterior square of the standard representation: C(X_1,2) - X_1 - X_2 + 1
    "V11": CharPoly(
        {
            LambdaSpec.of(2): 1,
            LambdaSpec.of(1): -1,
            LambdaSpec.of(0, 1): -1,
            LambdaSpec.of(): 1,
        }
    ),
    # complement of the trivial in the symmetric square: C(X_1,2) + X_2 - X_1
    "V2": CharPoly(
        {
            LambdaSpec.of(2): 1,
            LambdaSpec.of(0, 1): 1,
            LambdaSpec.of(1): -1,
        }
    ),
}


def builtin_rep(name: str) -> CharPoly:
    """One of the built-in representations V1, V11, V2."""
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown representation {name!r}; choose from V1, V11, V2")


# ---------------------------------------------------------------------------
# expression parser for user-entered character polynomials
#
# grammar: rational coefficients, variables X1..X9, operators + - *, and
# C(Xk, m) for binomial-coefficient atoms.

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>X[1-9])|(?P<name>C)|(?P<op>[+\-*(),]))"
)


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        tokens.append(m.group(m.lastgroup))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected!r}, found {tok!r}")
        self.pos += 1
        return tok

    def parse_expr(self) -> XPoly:
        out = self.parse_term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                out = out + self.parse_term()
            else:
                out = out - self.parse_term()
        return out

    def parse_term(self) -> XPoly:
        out = self.parse_factor()
        while self.peek() == "*":
            self.take()
            out = out * self.parse_factor()
        return out

    def parse_factor(self) -> XPoly:
        if self.peek() == "-":
            self.take()
            return -self.parse_factor()
        return self.parse_atom()

    def parse_atom(self) -> XPoly:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of expression")
        if tok == "(":
            self.take()
            out = self.parse_expr()
            self.take(")")
            return out
        if tok == "C":
            self.take()
            self.take("(")
            var = self.take()
            if not var.startswith("X"):
                raise ValueError(f"C() expects a variable, found {var!r}")
            k = int(var[1:])
            self.take(",")
            m_tok = self.take()
            if "/" in m_tok or not m_tok.isdigit():
                raise ValueError("C() expects a nonnegative integer order")
            self.take(")")
            m = int(m_tok)
            x = XPoly.variable(k)
            out = XPoly.constant(Fraction(1, math.factorial(m)))
            for j in range(m):
                out = out * (x - j)
            return out
        self.take()
        if tok.startswith("X"):
            return XPoly.variable(int(tok[1:]))
        return XPoly.constant(Fraction(tok))


def parse_char_poly(text: str) -> CharPoly:
    """Parse an expression in the CLI grammar into the binomial basis."""
    parser = _Parser(_tokenize(text))
    xp = parser.parse_expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input at token {parser.pos}")
    return monomials_to_binomial(xp)


def parse_rep(text: str) -> CharPoly:
    """Resolve a CLI rep argument: a builtin name, '1', or an expression."""
    name = text.strip()
    if name in _BUILTINS:
        return _BUILTINS[name]
    return parse_char_poly(name)
