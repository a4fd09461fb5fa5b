"""Exact integer and rational linear algebra helpers.

All routines work on tuples-of-tuples (immutable row-major matrices) of
Python ints or Fractions.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "as_matrix", "identity", "transpose", "mat_mul", "mat_vec", "dot",
    "gram_product", "bareiss_det", "leading_principal_minors",
    "rational_inverse", "solve_rational", "hnf_with_transform", "hnf_basis",
    "row_span_index", "kernel_basis", "integer_inverse",
]

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> tuple[tuple, ...]:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple[tuple, ...]:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def gram_product(u: Sequence, gram: Sequence[Sequence], v: Sequence):
    """Inner product u^T G v."""
    return dot(u, mat_vec(gram, v))


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_principal_minors(m: Sequence[Sequence[int]]) -> list[int]:
    """Determinants of the k x k top-left submatrices, k = 1..n."""
    return [bareiss_det([row[: k + 1] for row in m[: k + 1]]) for k in range(len(m))]


def rational_inverse(m: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse via Gauss-Jordan over Fractions.  Raises on singular input."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def solve_rational(m: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve m x = rhs exactly.  Raises ZeroDivisionError if m is singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def hnf_with_transform(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form.

    Returns (h, u) with u unimodular, u @ rows == h, h in row echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    Zero rows of h are collected at the bottom.
    """
    h = [list(r) for r in rows]
    m = len(h)
    n = len(h[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    piv_row = 0
    for col in range(n):
        # find a nonzero entry in this column at or below piv_row
        r = next((i for i in range(piv_row, m) if h[i][col] != 0), None)
        if r is None:
            continue
        h[piv_row], h[r] = h[r], h[piv_row]
        u[piv_row], u[r] = u[r], u[piv_row]
        # eliminate below via extended gcd steps
        for i in range(piv_row + 1, m):
            while h[i][col] != 0:
                q = h[piv_row][col] // h[i][col]
                if q != 0:
                    h[piv_row] = [a - q * b for a, b in zip(h[piv_row], h[i])]
                    u[piv_row] = [a - q * b for a, b in zip(u[piv_row], u[i])]
                h[piv_row], h[i] = h[i], h[piv_row]
                u[piv_row], u[i] = u[i], u[piv_row]
            # loop ends with h[i][col] == 0 and pivot in place
        if h[piv_row][col] < 0:
            h[piv_row] = [-a for a in h[piv_row]]
            u[piv_row] = [-a for a in u[piv_row]]
        # reduce entries above the pivot
        p = h[piv_row][col]
        for i in range(piv_row):
            q = h[i][col] // p
            if q != 0:
                h[i] = [a - q * b for a, b in zip(h[i], h[piv_row])]
                u[i] = [a - q * b for a, b in zip(u[i], u[piv_row])]
        piv_row += 1
        if piv_row == m:
            break
    return h, u


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return x, y, g


def hnf_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical basis (Hermite form) of the integer row span.

    Rows are inserted one at a time into an echelon structure, so memory stays
    O(n^2) no matter how many input rows there are.
    """
    if not rows:
        return []
    n = len(rows[0])
    basis: list[list[int]] = []
    pivcol: list[int] = []
    for row in rows:
        v = list(row)
        i = 0
        for j in range(n):
            if v[j] == 0:
                continue
            while i < len(basis) and pivcol[i] < j:
                i += 1
            if i < len(basis) and pivcol[i] == j:
                a, b = basis[i][j], v[j]
                if b % a == 0:
                    q = b // a
                    v = [x - q * y for x, y in zip(v, basis[i])]
                else:
                    x, y, g = _xgcd(a, b)
                    ag, bg = a // g, b // g
                    merged = [x * p + y * w for p, w in zip(basis[i], v)]
                    v = [-bg * p + ag * w for p, w in zip(basis[i], v)]
                    basis[i] = merged
            else:
                basis.insert(i, v)
                pivcol.insert(i, j)
                break
    # canonicalize: positive pivots, entries above each pivot reduced
    for i in range(len(basis)):
        p = pivcol[i]
        if basis[i][p] < 0:
            basis[i] = [-x for x in basis[i]]
        for k in range(i):
            q = basis[k][p] // basis[i][p]
            if q != 0:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return basis


def row_span_index(rows: Sequence[Sequence[int]], n: int) -> int | None:
    """Index of the integer row span inside Z^n, or None if the span has rank < n."""
    basis = hnf_basis(rows)
    if len(basis) < n:
        return None
    idx = 1
    for i in range(n):
        idx *= basis[i][i]
    return idx


def kernel_basis(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the integer (right) kernel {v : mat @ v = 0}, as rows."""
    cols = transpose(mat)
    if not cols:
        return []
    h, u = hnf_with_transform(cols)
    return [list(u[i]) for i in range(len(h)) if not any(x != 0 for x in h[i])]


def integer_inverse(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix, exact and integral."""
    inv = rational_inverse(m)
    out = []
    for row in inv:
        out.append(tuple(int(x) for x in row))
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
    return tuple(out)


