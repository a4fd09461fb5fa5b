"""Exact LLL reduction of Gram matrices, with recorded unimodular transforms.

The reduction works directly on the Gram matrix (no coordinate basis is
needed), keeping Gram-Schmidt data in exact rationals.  delta = 3/4.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import intlinalg
from .core import GramMatrix, LatticeError

DELTA = Fraction(3, 4)


@dataclass(frozen=True)
class ReducedBasis:
    """LLL-reduced Gram together with the unimodular change of basis.

    transform^T . G_original . transform == gram, |det transform| == 1.
    """

    gram: GramMatrix
    transform: tuple[tuple[int, ...], ...]


def _round_half_up(x: Fraction) -> int:
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)


def _gs_from_gram(g: list[list[int]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Gram-Schmidt coefficients mu[i][j] (j < i) and squared norms B[i]."""
    n = len(g)
    mu = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    c = [[Fraction(0)] * n for _ in range(n)]  # c[i][j] = (b_i, b*_j)
    for i in range(n):
        for j in range(i):
            c[i][j] = Fraction(g[i][j]) - sum(mu[j][k] * c[i][k] for k in range(j))
            mu[i][j] = c[i][j] / b[j]
        b[i] = Fraction(g[i][i]) - sum(mu[i][k] * c[i][k] for k in range(i))
    return mu, b


class _LLLState:
    def __init__(self, gram: GramMatrix):
        self.n = gram.rank
        self.g = [list(row) for row in gram.entries]
        self.u = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        self.mu, self.b = _gs_from_gram(self.g)

    def _translate(self, k: int, j: int, r: int):
        """b_k <- b_k - r b_j, updating gram, transform and mu."""
        g = self.g
        new_row = [g[k][i] - r * g[j][i] for i in range(self.n)]
        new_row[k] = g[k][k] - 2 * r * g[k][j] + r * r * g[j][j]
        for i in range(self.n):
            g[k][i] = new_row[i]
            g[i][k] = new_row[i]
        for row in self.u:
            row[k] -= r * row[j]
        mu = self.mu
        for i in range(j):
            mu[k][i] -= r * mu[j][i]
        mu[k][j] -= r

    def size_reduce(self, k: int, j: int):
        if 2 * abs(self.mu[k][j]) > 1:
            self._translate(k, j, _round_half_up(self.mu[k][j]))

    def swap(self, k: int):
        """Exchange basis vectors k-1 and k, updating all state."""
        g, mu, b, u = self.g, self.mu, self.b, self.u
        g[k - 1], g[k] = g[k], g[k - 1]
        for row in g:
            row[k - 1], row[k] = row[k], row[k - 1]
        for row in u:
            row[k - 1], row[k] = row[k], row[k - 1]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        bb = b[k] + m * m * b[k - 1]
        mu[k][k - 1] = m * b[k - 1] / bb
        b[k] = b[k - 1] * b[k] / bb
        b[k - 1] = bb
        for i in range(k + 1, self.n):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    def run(self):
        k = 1
        while k < self.n:
            self.size_reduce(k, k - 1)
            if self.b[k] < (DELTA - self.mu[k][k - 1] ** 2) * self.b[k - 1]:
                self.swap(k)
                k = max(k - 1, 1)
            else:
                for j in range(k - 2, -1, -1):
                    self.size_reduce(k, j)
                k += 1


def is_lll_reduced(gram: GramMatrix, delta: Fraction = DELTA) -> bool:
    """Check size-reduction and the Lovasz condition in exact rationals."""
    mu, b = _gs_from_gram([list(r) for r in gram.entries])
    n = gram.rank
    for i in range(n):
        for j in range(i):
            if 2 * abs(mu[i][j]) > 1:
                return False
    for k in range(1, n):
        if b[k] < (delta - mu[k][k - 1] ** 2) * b[k - 1]:
            return False
    return True


@lru_cache(maxsize=4096)
def lll_reduce(gram: GramMatrix) -> ReducedBasis:
    """LLL-reduce a Gram matrix; the isometry class is unchanged.

    The returned transform certifies transform^T G transform == gram exactly.
    """
    if gram.rank <= 1:
        return ReducedBasis(gram, intlinalg.identity(gram.rank))
    state = _LLLState(gram)
    state.run()
    reduced = GramMatrix(gram.rank, intlinalg.as_matrix(state.g))
    transform = intlinalg.as_matrix(state.u)
    check = intlinalg.mat_mul(intlinalg.mat_mul(intlinalg.transpose(transform), gram.entries), transform)
    assert check == reduced.entries, "LLL transform certificate failed"
    assert abs(intlinalg.bareiss_det(transform)) == 1
    assert is_lll_reduced(reduced)
    return ReducedBasis(reduced, transform)


def random_unimodular(rank: int, seed: int, entry_bound: int = 3, steps: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Deterministic pseudo-random unimodular matrix with |entries| <= entry_bound."""
    rng = random.Random(seed)
    n = rank
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    if n <= 1:
        if n == 1 and rng.random() < 0.5:
            u[0][0] = -1
        return intlinalg.as_matrix(u)
    total = steps if steps is not None else 30 * n
    done = 0
    attempts = 0
    while done < total and attempts < 50 * total:
        attempts += 1
        op = rng.randrange(3)
        if op == 0:
            i, j = rng.sample(range(n), 2)
            for row in u:
                row[i], row[j] = row[j], row[i]
            done += 1
        elif op == 1:
            i = rng.randrange(n)
            for row in u:
                row[i] = -row[i]
            done += 1
        else:
            i, j = rng.sample(range(n), 2)
            s = rng.choice((-1, 1))
            new_col = [row[i] + s * row[j] for row in u]
            if max(abs(x) for x in new_col) <= entry_bound:
                for row, val in zip(u, new_col):
                    row[i] = val
                done += 1
    return intlinalg.as_matrix(u)


def randomize_basis(gram: GramMatrix, seed: int) -> GramMatrix:
    """U^T G U for a seed-determined unimodular U; same isometry class."""
    u = random_unimodular(gram.rank, seed)
    ut = intlinalg.transpose(u)
    entries = intlinalg.mat_mul(intlinalg.mat_mul(ut, gram.entries), u)
    return GramMatrix(gram.rank, intlinalg.as_matrix(entries))
