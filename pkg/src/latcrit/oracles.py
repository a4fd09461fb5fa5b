"""Independent brute-force oracles.

These deliberately avoid the production code paths (no LLL, no recursive
pruned enumeration): coordinate boxes come straight from Cauchy-Schwarz
against the inverse Gram, and candidates are filtered by direct evaluation.
They exist to cross-check the fast implementations.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from . import intlinalg
from .core import GramMatrix, make_gram


def _box_limits(g: GramMatrix, bound: Fraction) -> list[int]:
    # x_i^2 <= bound * (G^-1)_ii for any x with x.G.x <= bound
    inv = intlinalg.rational_inverse(g.entries)
    limits = []
    for i in range(g.rank):
        m = bound * inv[i][i]
        limits.append(math.isqrt(m.numerator // m.denominator))
    return limits


def box_short_vectors(g: GramMatrix, bound) -> list[tuple[tuple[int, ...], int]]:
    """All vectors with 0 < norm <= bound by scanning the full coordinate box."""
    bound = Fraction(bound)
    limits = _box_limits(g, bound)
    out = []
    for coords in itertools.product(*[range(-l, l + 1) for l in limits]):
        first = next((c for c in coords if c != 0), 0)
        if first <= 0:  # skip zero and keep one representative per +-pair
            continue
        norm = g.norm(coords)
        if 0 < norm <= bound:
            out.append((coords, norm))
    out.sort(key=lambda vn: (vn[1], vn[0]))
    return out


def box_min_norm(g: GramMatrix, start_bound: int) -> int:
    """Minimal norm by box scan; start_bound must be attained by some vector."""
    vectors = box_short_vectors(g, start_bound)
    assert vectors
    return min(n for _, n in vectors)


def brute_force_represents(q: GramMatrix, l: GramMatrix) -> bool:
    """Existence of an embedding by enumerating integer matrices column by column.

    Column j ranges over the Cauchy-Schwarz box for norm l_jj; all pairwise
    inner products are checked by direct evaluation.
    """
    n, m = q.rank, l.rank
    if m > n:
        return False
    if m == 0:
        return True
    inv = intlinalg.rational_inverse(q.entries)
    col_candidates = []
    for j in range(m):
        target = l.entries[j][j]
        limits = []
        for i in range(n):
            v = Fraction(target) * inv[i][i]
            limits.append(math.isqrt(v.numerator // v.denominator))
        cands = [
            c for c in itertools.product(*[range(-b, b + 1) for b in limits])
            if q.norm(c) == target
        ]
        if not cands:
            return False
        col_candidates.append(cands)

    def place(j: int, chosen: list) -> bool:
        if j == m:
            return True
        for c in col_candidates[j]:
            if all(q.inner(chosen[k], c) == l.entries[k][j] for k in range(j)):
                chosen.append(c)
                if place(j + 1, chosen):
                    return True
                chosen.pop()
        return False

    return place(0, [])


def random_gram(rng: random.Random, rank: int, max_entry: int) -> GramMatrix:
    """Random positive-definite symmetric integer matrix with |entries| <= max_entry."""
    while True:
        rows = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            rows[i][i] = rng.randint(1, max_entry)
            for j in range(i + 1, rank):
                rows[i][j] = rows[j][i] = rng.randint(-max_entry, max_entry)
        if all(m > 0 for m in intlinalg.leading_principal_minors(rows)):
            return make_gram(rank, rows)
