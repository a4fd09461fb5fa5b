"""Parser and printer for lattice expressions.

Grammar:
    Expr := Term ('+' Term)*
    Term := [Int '*'] Atom ['^' Int]
    Atom := Name | 'diag(' Int (',' Int)* ')' | '(' Expr ')'

'+' is the orthogonal direct sum, 'Int *' scales the form, '^' repeats the
direct sum.  Names are catalog entries such as E8 or Zn(3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .catalog import catalog
from .core import GramMatrix, LatticeError, direct_sum_all, scale


class ParseError(LatticeError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


@dataclass(frozen=True)
class NameExpr:
    name: str


@dataclass(frozen=True)
class DiagExpr:
    entries: tuple[int, ...]


@dataclass(frozen=True)
class ScaleExpr:
    factor: int
    inner: "LatticeExpr"


@dataclass(frozen=True)
class PowerExpr:
    inner: "LatticeExpr"
    exponent: int


@dataclass(frozen=True)
class SumExpr:
    terms: tuple["LatticeExpr", ...]


LatticeExpr = Union[NameExpr, DiagExpr, ScaleExpr, PowerExpr, SumExpr]


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> tuple[str, str, int]:
        """(kind, value, position) of the next token; kind 'end' at EOF."""
        self._skip_ws()
        if self.pos >= len(self.text):
            return ("end", "", self.pos)
        start = self.pos
        ch = self.text[start]
        if ch.isdigit():
            end = start
            while end < len(self.text) and self.text[end].isdigit():
                end += 1
            return ("int", self.text[start:end], start)
        if ch.isalpha():
            end = start
            while end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "_"):
                end += 1
            return ("name", self.text[start:end], start)
        if ch in "+*^(),":
            return (ch, ch, start)
        raise ParseError(f"unexpected character {ch!r}", start)

    def take(self, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'!r}", tok[2])
        self.pos = tok[2] + len(tok[1])
        return tok


def parse_lattice_expr(text: str) -> LatticeExpr:
    """Parse to an AST; raises ParseError with the offending position."""
    tz = _Tokenizer(text)
    expr = _parse_sum(tz)
    tok = tz.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
    return expr


def _parse_sum(tz: _Tokenizer) -> LatticeExpr:
    terms = [_parse_term(tz)]
    while tz.peek()[0] == "+":
        tz.take("+")
        terms.append(_parse_term(tz))
    if len(terms) == 1:
        return terms[0]
    return SumExpr(tuple(terms))


def _parse_term(tz: _Tokenizer) -> LatticeExpr:
    kind, value, pos = tz.peek()
    factor = None
    if kind == "int":
        tz.take("int")
        tz.take("*")
        factor = int(value)
        if factor < 1:
            raise ParseError("scale factor must be >= 1", pos)
    node = _parse_atom(tz)
    if tz.peek()[0] == "^":
        tz.take("^")
        _, value, pos = tz.take("int")
        exponent = int(value)
        if exponent < 1:
            raise ParseError("power must be >= 1", pos)
        node = PowerExpr(node, exponent)
    if factor is not None:
        node = ScaleExpr(factor, node)
    return node


def _parse_atom(tz: _Tokenizer) -> LatticeExpr:
    kind, value, pos = tz.peek()
    if kind == "(":
        tz.take("(")
        inner = _parse_sum(tz)
        tz.take(")")
        return inner
    if kind != "name":
        raise ParseError(f"expected a lattice name, found {value or 'end of input'!r}", pos)
    tz.take("name")
    if value == "diag":
        tz.take("(")
        entries = [_parse_diag_entry(tz)]
        while tz.peek()[0] == ",":
            tz.take(",")
            entries.append(_parse_diag_entry(tz))
        tz.take(")")
        return DiagExpr(tuple(entries))
    if tz.peek()[0] == "(":
        tz.take("(")
        _, arg, _ = tz.take("int")
        tz.take(")")
        return NameExpr(f"{value}({arg})")
    return NameExpr(value)


def _parse_diag_entry(tz: _Tokenizer) -> int:
    _, value, pos = tz.take("int")
    n = int(value)
    if n < 1:
        raise ParseError("diag entries must be >= 1", pos)
    return n


def expr_gram(expr: LatticeExpr) -> GramMatrix:
    """Evaluate an AST to the Gram matrix it denotes."""
    if isinstance(expr, NameExpr):
        return catalog(expr.name)
    if isinstance(expr, DiagExpr):
        n = len(expr.entries)
        rows = [[expr.entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return GramMatrix(n, tuple(tuple(r) for r in rows))
    if isinstance(expr, ScaleExpr):
        return scale(expr_gram(expr.inner), expr.factor)
    if isinstance(expr, PowerExpr):
        g = expr_gram(expr.inner)
        return direct_sum_all(g for _ in range(expr.exponent))
    if isinstance(expr, SumExpr):
        return direct_sum_all(expr_gram(t) for t in expr.terms)
    raise TypeError(f"not a lattice expression: {expr!r}")


def format_expr(expr: LatticeExpr) -> str:
    """Print an AST so that parse(format(e)) denotes the same Gram matrix."""
    if isinstance(expr, NameExpr):
        return expr.name
    if isinstance(expr, DiagExpr):
        return "diag(" + ",".join(str(x) for x in expr.entries) + ")"
    if isinstance(expr, ScaleExpr):
        inner = format_expr(expr.inner)
        if isinstance(expr.inner, (SumExpr, ScaleExpr)):
            inner = f"({inner})"
        return f"{expr.factor}*{inner}"
    if isinstance(expr, PowerExpr):
        inner = format_expr(expr.inner)
        if not isinstance(expr.inner, (NameExpr, DiagExpr)):
            inner = f"({inner})"
        return f"{inner}^{expr.exponent}"
    if isinstance(expr, SumExpr):
        return " + ".join(format_expr(t) for t in expr.terms)
    raise TypeError(f"not a lattice expression: {expr!r}")


def parse_expr(text: str) -> GramMatrix:
    """Parse an expression and return the Gram matrix it denotes."""
    return expr_gram(parse_lattice_expr(text))
