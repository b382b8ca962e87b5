"""Exact computation of twisted Betti numbers of configuration spaces of the
complex line and of spaces of maximal tori, cross-validated by weighted point
counts over finite fields.  All arithmetic is exact rational."""

from . import chars, conf_betti, conf_counts, series, tori, zeta
from .chars import CharPoly, CycleType, LambdaSpec, builtin_rep, parse_rep
from .series import BiSeries, Laurent, Poly, Rational, RationalFunction, RecurrenceSpec
from .zeta import PointCountData, builtin_variety

__all__ = [
    "chars",
    "conf_betti",
    "conf_counts",
    "series",
    "tori",
    "zeta",
    "CharPoly",
    "CycleType",
    "LambdaSpec",
    "builtin_rep",
    "parse_rep",
    "BiSeries",
    "Laurent",
    "Poly",
    "Rational",
    "RationalFunction",
    "RecurrenceSpec",
    "PointCountData",
    "builtin_variety",
]
