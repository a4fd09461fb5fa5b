"""Gram-matrix algebra for positive-definite integral lattices.

A lattice is represented abstractly by its Gram matrix (pairwise inner
products of a basis), always with exact integer entries.  Duals live in
exact rational matrices.  Every value is immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import intlinalg


class LatticeError(Exception):
    """Base class for all lattice toolkit errors."""


class NotSymmetric(LatticeError):
    pass


class NotPositiveDefinite(LatticeError):
    def __init__(self, minor_index: int, minor_value: int):
        self.minor_index = minor_index
        self.minor_value = minor_value
        super().__init__(
            f"leading principal minor {minor_index + 1} is {minor_value} (must be > 0)"
        )


class UnknownName(LatticeError):
    pass


class GramFormatError(LatticeError):
    """Malformed Gram text file."""


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric positive-definite integer matrix, up to isometry a lattice.

    Rank 0 is allowed and acts as the identity for direct sums.
    """

    rank: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rank < 0:
            raise LatticeError("rank must be >= 0")
        if len(self.entries) != self.rank or any(len(r) != self.rank for r in self.entries):
            raise LatticeError("entries must be a rank x rank matrix")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.rank))

    def inner(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Inner product u^T G v of two coordinate vectors."""
        return intlinalg.gram_product(u, self.entries, v)

    def norm(self, v: Sequence[int]) -> int:
        return self.inner(v, v)

    def __repr__(self):
        return f"GramMatrix(rank={self.rank}, entries={self.entries!r})"


@dataclass(frozen=True)
class RationalMatrix:
    """Exact rational matrix; Fractions keep entries canonical automatically."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def to_gram(self) -> GramMatrix:
        """Reinterpret an integral rational matrix as a Gram matrix."""
        if not self.is_integral():
            raise LatticeError("matrix has non-integer entries")
        return make_gram(self.rows, [[int(x) for x in row] for row in self.entries])


RationalVector = tuple[Fraction, ...]


def make_gram(rank: int, entries: Sequence[Sequence[int]]) -> GramMatrix:
    """Validate and build a GramMatrix.

    Checks shape, symmetry, and positive-definiteness (all leading principal
    minors positive, computed fraction-free).
    """
    if len(entries) != rank or any(len(r) != rank for r in entries):
        raise LatticeError(f"expected a {rank}x{rank} matrix")
    rows = intlinalg.as_matrix(entries)
    for i in range(rank):
        for j in range(i + 1, rank):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"entries[{i}][{j}] != entries[{j}][{i}]")
    for k, minor in enumerate(intlinalg.leading_principal_minors(rows)):
        if minor <= 0:
            raise NotPositiveDefinite(k, minor)
    return GramMatrix(rank, rows)


def diag_gram(values: Iterable[int]) -> GramMatrix:
    vals = list(values)
    n = len(vals)
    return make_gram(n, [[vals[i] if i == j else 0 for j in range(n)] for i in range(n)])


@lru_cache(maxsize=100_000)
def det(g: GramMatrix) -> int:
    """Exact determinant (the lattice discriminant)."""
    return intlinalg.bareiss_det(g.entries)


def direct_sum(g1: GramMatrix, g2: GramMatrix) -> GramMatrix:
    n1, n2 = g1.rank, g2.rank
    rows = []
    for i in range(n1):
        rows.append(tuple(g1.entries[i]) + (0,) * n2)
    for i in range(n2):
        rows.append((0,) * n1 + tuple(g2.entries[i]))
    return GramMatrix(n1 + n2, tuple(rows))


def direct_sum_all(grams: Iterable[GramMatrix]) -> GramMatrix:
    total = GramMatrix(0, ())
    for g in grams:
        total = direct_sum(total, g)
    return total


def scale(g: GramMatrix, m: int) -> GramMatrix:
    if m < 1:
        raise LatticeError("scale factor must be >= 1")
    return GramMatrix(g.rank, tuple(tuple(m * x for x in row) for row in g.entries))


@lru_cache(maxsize=1024)
def dual_gram(g: GramMatrix) -> RationalMatrix:
    """Gram matrix of the dual lattice: the exact inverse of g."""
    inv = intlinalg.rational_inverse(g.entries)
    return RationalMatrix(g.rank, g.rank, inv)


@lru_cache(maxsize=1024)
def adjugate_gram(g: GramMatrix) -> GramMatrix:
    """det(g) * g^-1, integral; the rescaled dual used for dual enumeration."""
    d = det(g)
    inv = intlinalg.rational_inverse(g.entries)
    rows = []
    for row in inv:
        vals = []
        for x in row:
            y = x * d
            assert y.denominator == 1
            vals.append(int(y))
        rows.append(vals)
    return make_gram(g.rank, rows)


def gram_to_text(g: GramMatrix) -> str:
    """Serialize in the bit-exact text format: rank line, then one row per line."""
    lines = [str(g.rank)]
    for row in g.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def gram_from_text(text: str) -> GramMatrix:
    """Parse the Gram text format; '#' lines are comments."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GramFormatError("empty input")
    try:
        rank = int(lines[0])
    except ValueError:
        raise GramFormatError(f"bad rank line: {lines[0]!r}") from None
    if rank < 0:
        raise GramFormatError("rank must be >= 0")
    if len(lines) != rank + 1:
        raise GramFormatError(f"expected {rank} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise GramFormatError(f"bad matrix row: {ln!r}") from None
        if len(row) != rank:
            raise GramFormatError(f"row has {len(row)} entries, expected {rank}")
        rows.append(row)
    return make_gram(rank, rows)
