"""Exact-arithmetic toolkit for positive-definite integral lattices."""

from .catalog import catalog
from .core import (
    GramMatrix,
    LatticeError,
    NotPositiveDefinite,
    NotSymmetric,
    RationalMatrix,
    UnknownName,
    det,
    direct_sum,
    dual_gram,
    gram_from_text,
    gram_to_text,
    make_gram,
    scale,
)
from .exprs import ParseError, format_expr, parse_expr, parse_lattice_expr

__all__ = [
    "GramMatrix", "RationalMatrix", "LatticeError", "NotSymmetric",
    "NotPositiveDefinite", "UnknownName", "ParseError",
    "make_gram", "det", "direct_sum", "scale", "dual_gram",
    "gram_to_text", "gram_from_text", "catalog",
    "parse_expr", "parse_lattice_expr", "format_expr",
]
