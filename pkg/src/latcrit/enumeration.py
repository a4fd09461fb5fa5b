"""Short-vector enumeration and derived quantities, all in exact arithmetic.

The enumerator is Fincke-Pohst on an exact rational LDL decomposition of the
(LLL-reduced) Gram matrix.  Interval endpoints come from integer square roots
of exact bounds, so no vector is ever missed or spuriously included.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from . import intlinalg
from .core import GramMatrix, LatticeError, RationalVector, adjugate_gram, det
from .reduction import lll_reduce


class SingularSublattice(LatticeError):
    pass


@dataclass(frozen=True)
class ShortVectorList:
    """All lattice vectors v with 0 < v.G.v <= bound, one per +-pair.

    Representatives have positive first nonzero coordinate and are sorted by
    (norm, coordinates).
    """

    bound: Fraction
    vectors: tuple[tuple[tuple[int, ...], int], ...]

    def __len__(self):
        return len(self.vectors)

    def norms(self) -> list[int]:
        return [n for _, n in self.vectors]

    def count_of_norm(self, m: int, both_signs: bool = False) -> int:
        c = sum(1 for _, n in self.vectors if n == m)
        return 2 * c if both_signs else c

    def of_norm(self, m: int) -> list[tuple[int, ...]]:
        return [v for v, n in self.vectors if n == m]

    def signed(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Both signs of every representative."""
        for v, n in self.vectors:
            yield v, n
            yield tuple(-x for x in v), n


def _ldl(entries: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Fincke-Pohst quadratic completion: q[i][i] (x_i + sum_j>i q[i][j] x_j)^2."""
    n = len(entries)
    q = [[Fraction(x) for x in row] for row in entries]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _fp_tables(entries) -> tuple[list[int], list[list[int]]]:
    """Integral Gram-Schmidt data for Fincke-Pohst.

    Returns (d, lam) with d[i] the i-th leading principal minor (d[0] = 1) and
    lam[i][j] = d[i+1] * q[i][j] for j > i, which is always an integer.
    """
    n = len(entries)
    q = _ldl(entries)
    d = [1] * (n + 1)
    for i in range(n):
        v = d[i] * q[i][i]
        assert v.denominator == 1
        d[i + 1] = int(v)
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = q[i][j] * d[i + 1]
            assert v.denominator == 1
            lam[i][j] = int(v)
    return d, lam


def _enumerate_halfspace(entries, bound: Fraction) -> list[tuple[tuple[int, ...], Fraction]]:
    """All (coords, norm) with 0 < norm <= bound, one per +-pair.

    The representative has its last nonzero coordinate positive; coordinates
    refer to the given Gram directly.  The level-i weight is d[i+1]/d[i] and
    the level-i center is an integer divided by d[i+1], so interval endpoints
    need only integer arithmetic.
    """
    n = len(entries)
    if n == 0:
        return []
    d, lam = _fp_tables(entries)
    x = [0] * n
    # s_acc[l][i] = sum_{j >= i} lam[l][j] x_j along the current path
    s_acc = [[0] * (n + 1) for _ in range(n)]
    out: list[tuple[tuple[int, ...], Fraction]] = []
    isqrt = math.isqrt

    def descend(i: int, budget: Fraction, tail_zero: bool):
        di, di1 = d[i], d[i + 1]
        a = s_acc[i][i + 1]
        tn, td = budget.numerator, budget.denominator
        if tn < 0:
            return
        m = (tn * di1 * di) // td
        s = isqrt(m)
        lo = -((a + s) // di1)
        if tail_zero and lo < 0:
            lo = 0
        hi = (s - a) // di1
        dd = di * di1
        for xi in range(lo, hi + 1):
            p = di1 * xi + a
            rem = budget - Fraction(p * p, dd)
            if rem < 0:
                continue
            zero_here = tail_zero and xi == 0
            x[i] = xi
            if i == 0:
                if not zero_here:
                    out.append((tuple(x), bound - rem))
            else:
                lam_col = i
                for l in range(i):
                    row = s_acc[l]
                    row[i] = row[i + 1] + lam[l][lam_col] * xi
                descend(i - 1, rem, zero_here)
        x[i] = 0

    descend(n - 1, bound, True)
    return out


def _canonical_sign(v: tuple[int, ...]) -> tuple[int, ...]:
    for c in v:
        if c > 0:
            return v
        if c < 0:
            return tuple(-x for x in v)
    return v


@lru_cache(maxsize=64)
def short_vectors(g: GramMatrix, bound) -> ShortVectorList:
    """Complete list of nonzero vectors of norm <= bound, up to sign."""
    bound = Fraction(bound)
    if bound < 0:
        raise LatticeError("bound must be >= 0")
    if g.rank == 0 or bound == 0:
        return ShortVectorList(bound, ())
    red = lll_reduce(g)
    u = red.transform
    out = []
    for y, norm in _enumerate_halfspace(red.gram.entries, bound):
        coords = _canonical_sign(intlinalg.mat_vec(u, y))
        if norm.denominator == 1:
            norm = int(norm)
        out.append((coords, norm))
    out.sort(key=lambda vn: (vn[1], vn[0]))
    return ShortVectorList(bound, tuple(out))


@lru_cache(maxsize=1024)
def min_norm(g: GramMatrix) -> int:
    """Smallest nonzero norm, by enumeration with a shrinking bound.

    Seeds the bound with the smallest reduced diagonal entry (always attained)
    and searches for anything strictly shorter, pruning exactly.
    """
    if g.rank == 0:
        raise LatticeError("the rank-0 lattice has no nonzero vectors")
    red = lll_reduce(g).gram
    best = min(red.diagonal)  # attained by a reduced basis vector
    if best == 1:
        return 1
    entries = red.entries
    n = red.rank
    d, lam = _fp_tables(entries)
    s_acc = [[0] * (n + 1) for _ in range(n)]
    isqrt = math.isqrt

    def descend(i: int, spent: Fraction, tail_zero: bool) -> None:
        nonlocal best
        di, di1 = d[i], d[i + 1]
        a = s_acc[i][i + 1]
        budget = best - 1 - spent
        tn, td = budget.numerator, budget.denominator
        if tn < 0:
            return
        s = isqrt((tn * di1 * di) // td)
        lo = -((a + s) // di1)
        if tail_zero and lo < 0:
            lo = 0
        hi = (s - a) // di1
        dd = di * di1
        for xi in range(lo, hi + 1):
            p = di1 * xi + a
            used = spent + Fraction(p * p, dd)
            if used > best - 1:
                continue
            zero_here = tail_zero and xi == 0
            if i == 0:
                if not zero_here and used < best:
                    assert used.denominator == 1
                    best = int(used)
            else:
                for l in range(i):
                    row = s_acc[l]
                    row[i] = row[i + 1] + lam[l][i] * xi
                descend(i - 1, used, zero_here)

    descend(n - 1, Fraction(0), True)
    return best


def min_dual_norm(g: GramMatrix) -> Fraction:
    """Minimal norm of the dual lattice, as an exact rational.

    Enumerates the integral rescaled Gram det(g) * g^-1 and divides by det(g).
    """
    return Fraction(min_norm(adjugate_gram(g)), det(g))


def generated_by_norms_up_to(g: GramMatrix, bound: int) -> bool:
    """True iff the vectors of norm <= bound span the whole lattice over Z."""
    if g.rank == 0:
        return True
    svs = short_vectors(g, bound)
    if not svs.vectors:
        return False
    index = intlinalg.row_span_index([list(v) for v, _ in svs.vectors], g.rank)
    return index == 1


def smallest_generating_norm(g: GramMatrix, cap: int | None = None) -> int:
    """Least integer bound b with generated_by_norms_up_to(g, b).

    The max diagonal entry of the reduced Gram always works, so the search is
    finite; exceeding it means an internal error.
    """
    if g.rank == 0:
        return 1
    limit = max(lll_reduce(g).gram.diagonal) if cap is None else cap
    for b in range(1, limit + 1):
        if generated_by_norms_up_to(g, b):
            return b
    raise AssertionError("reduced basis vectors must generate the lattice")


def project_onto_sublattice(
    q: GramMatrix,
    sub_basis: Sequence[Sequence[int]],
    v: Sequence[int],
) -> tuple[RationalVector, Fraction, bool]:
    """Orthogonal projection of v onto the rational span of a sublattice.

    sub_basis holds the sublattice basis vectors in q-coordinates (one vector
    per row).  Returns (coords of the projection in sublattice coordinates,
    its norm, whether every inner product with the sublattice basis is an
    integer).  The last flag is always true for integer inputs.
    """
    m = len(sub_basis)
    gram_l = [[intlinalg.gram_product(a, q.entries, b) for b in sub_basis] for a in sub_basis]
    if intlinalg.bareiss_det(gram_l) == 0:
        raise SingularSublattice("sublattice basis vectors are dependent")
    rhs = [intlinalg.gram_product(b, q.entries, v) for b in sub_basis]
    coords = intlinalg.solve_rational(gram_l, rhs)
    norm = sum(c * r for c, r in zip(coords, rhs))
    in_dual = all(isinstance(r, int) or Fraction(r).denominator == 1 for r in rhs)
    assert in_dual, "projection of an integral vector must land in the dual"
    return tuple(Fraction(c) for c in coords), Fraction(norm), in_dual
