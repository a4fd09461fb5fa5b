"""Lattice-into-lattice representation: existence, certificates, complements.

represents() runs a complete backtracking search: candidate images for each
basis vector are all target vectors of the required norm (from the exact
enumerator), pruned by the inner products with previously placed vectors.
Absence is therefore a proof, not a heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import intlinalg
from .core import GramMatrix, LatticeError, det, direct_sum
from .enumeration import min_norm, short_vectors
from .reduction import lll_reduce


class NotUnimodular(LatticeError):
    pass


@dataclass(frozen=True)
class Embedding:
    """Form-preserving injection source -> target.

    matrix is rank(target) x rank(source); its columns are the images of the
    source basis vectors.  Validity (matrix^T G_target matrix == G_source) is
    checked on construction.
    """

    source: GramMatrix
    target: GramMatrix
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, m = self.target.rank, self.source.rank
        if len(self.matrix) != n or any(len(r) != m for r in self.matrix):
            raise LatticeError("embedding matrix has wrong shape")
        mt = intlinalg.transpose(self.matrix)
        check = intlinalg.mat_mul(intlinalg.mat_mul(mt, self.target.entries), self.matrix)
        if tuple(check) != self.source.entries:
            raise LatticeError("embedding does not preserve the bilinear form")

    @property
    def basis_vectors(self) -> list[tuple[int, ...]]:
        """Images of the source basis, as vectors in target coordinates."""
        return [tuple(col) for col in intlinalg.transpose(self.matrix)]


def identity_embedding(g: GramMatrix) -> Embedding:
    return Embedding(g, g, intlinalg.identity(g.rank))


def compose(outer: Embedding, inner: Embedding) -> Embedding:
    """outer o inner, an embedding of inner.source into outer.target."""
    if inner.target != outer.source:
        raise LatticeError("embeddings do not compose")
    return Embedding(inner.source, outer.target, intlinalg.mat_mul(outer.matrix, inner.matrix))


def embedding_direct_sum(e1: Embedding, e2: Embedding) -> Embedding:
    """Block embedding of source1 + source2 into target1 + target2."""
    n1, n2 = e1.target.rank, e2.target.rank
    m1, m2 = e1.source.rank, e2.source.rank
    rows = []
    for i in range(n1):
        rows.append(tuple(e1.matrix[i]) + (0,) * m2)
    for i in range(n2):
        rows.append((0,) * m1 + tuple(e2.matrix[i]))
    return Embedding(
        direct_sum(e1.source, e2.source),
        direct_sum(e1.target, e2.target),
        tuple(rows),
    )


def _search(q: GramMatrix, target_gram: list[list[int]]) -> list[tuple[int, ...]] | None:
    """Find vectors t_0..t_{m-1} in q with pairwise inner products target_gram."""
    m = len(target_gram)
    maxnorm = max(target_gram[i][i] for i in range(m))
    # availability of the smaller required norms is far cheaper to refute than
    # enumerating the full ball, so probe them in increasing order first
    for norm in sorted({target_gram[i][i] for i in range(m)}):
        if norm < maxnorm and short_vectors(q, norm).count_of_norm(norm) == 0:
            return None
    svl = short_vectors(q, maxnorm)
    by_norm: dict[int, list[tuple[int, ...]]] = {}
    for v, norm in svl.vectors:
        by_norm.setdefault(norm, []).append(v)
        by_norm.setdefault(norm, []).append(tuple(-c for c in v))
    for i in range(m):
        if target_gram[i][i] not in by_norm:
            return None
    gq = q.entries
    placed: list[tuple[int, ...]] = []
    placed_g: list[tuple[int, ...]] = []  # G_q . t_j, for fast inner products

    def extend(i: int) -> bool:
        want = target_gram[i]
        for w in by_norm[want[i]]:
            ok = True
            for j in range(i):
                if intlinalg.dot(placed_g[j], w) != want[j]:
                    ok = False
                    break
            if ok:
                placed.append(w)
                placed_g.append(intlinalg.mat_vec(gq, w))
                if i + 1 == m or extend(i + 1):
                    return True
                placed.pop()
                placed_g.pop()
        return False

    if m == 0 or extend(0):
        return placed
    return None


def represents(q: GramMatrix, l: GramMatrix) -> Embedding | None:
    """An embedding of l into q, or None if none exists (complete search).

    The source is LLL-reduced and its basis placed in decreasing-norm order;
    high-norm vectors have the fewest candidate images.
    """
    if l.rank > q.rank:
        return None
    if l.rank == 0:
        return Embedding(l, q, tuple(() for _ in range(q.rank)))
    if l == q:
        return identity_embedding(l)
    red = lll_reduce(l)
    h = red.gram
    order = sorted(range(l.rank), key=lambda i: (-h.entries[i][i], i))
    k = [[h.entries[a][b] for b in order] for a in order]
    placed = _search(q, k)
    if placed is None:
        return None
    cols = [None] * l.rank
    for pos, idx in enumerate(order):
        cols[idx] = placed[pos]
    t_red = intlinalg.transpose(cols)  # n x m, columns are images of the reduced basis
    v_inv = intlinalg.integer_inverse(red.transform)
    t = intlinalg.mat_mul(t_red, v_inv)
    return Embedding(l, q, intlinalg.as_matrix(t))


@lru_cache(maxsize=200_000)
def is_isometric(g1: GramMatrix, g2: GramMatrix) -> Embedding | None:
    """An isometry g1 -> g2, or None.

    With equal rank and determinant, any embedding has index 1 and is
    automatically an isometry, so this reduces to represents().  A minimal
    norm mismatch settles the negative case without a search.
    """
    if g1.rank != g2.rank or det(g1) != det(g2):
        return None
    if g1 == g2:
        return identity_embedding(g1)
    if g1.rank > 0 and min_norm(g1) != min_norm(g2):
        return None
    return represents(g2, g1)


def _complement_rows(q: GramMatrix, emb: Embedding) -> list[list[int]]:
    constraints = intlinalg.mat_mul(intlinalg.transpose(emb.matrix), q.entries)
    rows = intlinalg.kernel_basis(constraints)
    assert len(rows) == q.rank - emb.source.rank
    return rows


def orthogonal_complement(q: GramMatrix, emb: Embedding) -> GramMatrix:
    """Gram of {v in q : (v, image of emb) = 0}, via the integer kernel."""
    if emb.target != q:
        raise LatticeError("embedding does not land in the given lattice")
    rows = _complement_rows(q, emb)
    raw = [[intlinalg.gram_product(a, q.entries, b) for b in rows] for a in rows]
    if not rows:
        return GramMatrix(0, ())
    return lll_reduce(GramMatrix(len(rows), intlinalg.as_matrix(raw))).gram


def unimodular_summand_split(q: GramMatrix, emb: Embedding) -> tuple[GramMatrix, Embedding]:
    """Split a unimodular sublattice off as a direct summand.

    Returns (complement C, certificate), the certificate being an isometry of
    source + C onto q.  A unimodular sublattice of an integral lattice is
    always a direct summand, so the certificate must verify; failure to do so
    is an internal error, not a recoverable state.
    """
    if emb.target != q:
        raise LatticeError("embedding does not land in the given lattice")
    if det(emb.source) != 1:
        raise NotUnimodular(f"sublattice has determinant {det(emb.source)}")
    rows = _complement_rows(q, emb)
    if rows:
        raw = GramMatrix(len(rows), intlinalg.as_matrix(
            [[intlinalg.gram_product(a, q.entries, b) for b in rows] for a in rows]
        ))
        red = lll_reduce(raw)
        comp = red.gram
        rows = intlinalg.mat_mul(intlinalg.transpose(red.transform), rows)
    else:
        comp = GramMatrix(0, ())
    cols = [list(col) for col in intlinalg.transpose(emb.matrix)] + [list(r) for r in rows]
    cert_matrix = intlinalg.as_matrix(intlinalg.transpose(cols))
    assert abs(intlinalg.bareiss_det(cert_matrix)) == 1, "unimodular summand failed to split"
    cert = Embedding(direct_sum(emb.source, comp), q, cert_matrix)
    return comp, cert
