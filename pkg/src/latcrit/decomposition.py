"""Decomposition into indecomposable orthogonal summands (Kneser's method).

A nonzero vector v is decomposable when v = x + y with x, y nonzero lattice
vectors and (x, y) >= 0.  The indecomposable vectors of norm up to the largest
reduced diagonal entry span the lattice, and the graph on them (edges between
non-orthogonal vectors) has one connected component per indecomposable
summand.  Uniqueness of the decomposition makes the summand multiset a
lattice invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import intlinalg
from .core import GramMatrix, det, direct_sum_all, make_gram, scale
from .embedding import Embedding, is_isometric
from .enumeration import min_norm, short_vectors
from .reduction import lll_reduce
from .catalog import catalog as catalog_lookup


@dataclass(frozen=True)
class Decomposition:
    """Indecomposable summands in canonical form, with embeddings into the original."""

    original: GramMatrix
    summands: tuple[GramMatrix, ...]
    embeddings: tuple[Embedding, ...]

    def multiset_key(self) -> tuple:
        """Hashable canonical multiset of summand Grams."""
        return tuple((g.rank, det(g), g.entries) for g in self.summands)


def _indecomposable_vectors(red: GramMatrix) -> list[tuple[int, ...]]:
    """Kneser's candidate set: indecomposable vectors of norm <= max diagonal."""
    dmax = max(red.diagonal)
    svl = short_vectors(red, dmax)
    by_norm: dict[int, list[tuple[int, ...]]] = {}
    for v, n in svl.vectors:
        by_norm.setdefault(n, []).append(v)
    norms = sorted(by_norm)
    shorter: list[tuple[tuple[int, ...], int]] = []  # reps of strictly smaller norm
    out: list[tuple[int, ...]] = []
    for norm in norms:
        for v in by_norm[norm]:
            if shorter:
                gv = intlinalg.mat_vec(red.entries, v)
                # v = x + (v - x) with (x, v - x) >= 0  <=>  |(x, v)| >= (x, x)
                decomposable = any(
                    abs(intlinalg.dot(x, gv)) >= nx for x, nx in shorter
                )
            else:
                decomposable = False
            if not decomposable:
                out.append(v)
        shorter.extend((v, norm) for v in by_norm[norm])
    return out


def _components(red: GramMatrix, vectors: list[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
    """Group indecomposable vectors by summand.

    Each indecomposable vector lies in exactly one summand and is orthogonal
    to every other, so growing the span until no vector meets it recovers the
    graph components without building the full graph.  A full-rank span joins
    everything immediately.
    """
    n = red.rank
    remaining = list(vectors)
    components = []
    while remaining:
        comp = [remaining.pop(0)]
        basis_rows = [list(comp[0])]
        basis_g = [intlinalg.mat_vec(red.entries, comp[0])]
        rank = 1
        while remaining:
            if rank == n:
                comp.extend(remaining)
                remaining = []
                break
            still = []
            changed = False
            for idx, u in enumerate(remaining):
                if any(intlinalg.dot(u, bg) != 0 for bg in basis_g):
                    comp.append(u)
                    changed = True
                    if rank < n:
                        trial = basis_rows + [list(u)]
                        r = len(intlinalg.hnf_basis(trial))
                        if r > rank:
                            basis_rows, rank = trial, r
                            basis_g.append(intlinalg.mat_vec(red.entries, u))
                            if rank == n:
                                comp.extend(remaining[idx + 1:])
                                still = []
                                break
                else:
                    still.append(u)
            remaining = still
            if not changed:
                break
        components.append(comp)
    return components


def _is_saturated(rows: list[tuple[int, ...]]) -> bool:
    """Whether the span of the rows is a saturated sublattice (gcd of maximal minors 1)."""
    k = len(rows)
    n = len(rows[0])
    g = 0
    for cols in itertools.combinations(range(n), k):
        sub = [[row[c] for c in cols] for row in rows]
        g = gcd(g, intlinalg.bareiss_det(sub))
        if g == 1:
            return True
    return False


_LEXMIN_MAX_RANK = 4


def _lexmin_basis(h: GramMatrix) -> list[tuple[int, ...]] | None:
    """Lexicographically minimal Gram over saturated bases of bounded norm.

    All ingredients (candidate vector set, Gram values, saturation) are
    intrinsic, so the resulting Gram is identical for every presentation of
    the same lattice.  Returns None if no basis fits the current bound.
    """
    n = h.rank
    bound = min_norm(h)
    while True:
        svl = short_vectors(h, bound)
        rows = [list(v) for v, _ in svl.vectors]
        if rows and len(intlinalg.hnf_basis(rows)) == n:
            break
        bound += 1
    for _ in range(3):  # bound growth on dead-ends is rare but sound
        result = _lexmin_search(h, bound)
        if result is not None:
            return result
        bound += 1
    raise AssertionError("lexmin search failed to find a basis")


def _lexmin_search(h: GramMatrix, bound: int) -> list[tuple[int, ...]] | None:
    n = h.rank
    cands: list[tuple[tuple[int, ...], int]] = []
    for v, norm in short_vectors(h, bound).vectors:
        cands.append((v, norm))
        cands.append((tuple(-x for x in v), norm))
    prefixes: list[list[tuple[int, ...]]] = [[]]
    for _ in range(n):
        best_row = None
        nexts: list[list[tuple[int, ...]]] = []
        for p in prefixes:
            gp = [intlinalg.mat_vec(h.entries, v) for v in p]
            for w, norm in cands:
                row = (norm,) + tuple(intlinalg.dot(w, g) for g in gp)
                if best_row is not None and row > best_row:
                    continue
                if not _is_saturated(p + [w]):
                    continue
                if best_row is None or row < best_row:
                    best_row = row
                    nexts = [p + [w]]
                else:
                    nexts.append(p + [w])
        if best_row is None:
            return None
        prefixes = nexts
        assert len(prefixes) <= 500_000, "canonical search blew up"
    return prefixes[0]


def _catalog_candidates(rank: int, d: int):
    # root lattices only: their isometry searches stay fast at these ranks
    if rank == 6 and d == 3:
        yield catalog_lookup("E6")
    if rank == 7 and d == 2:
        yield catalog_lookup("E7")
    if rank == 8 and d == 1:
        yield catalog_lookup("E8")
    if d == rank + 1:
        yield catalog_lookup(f"An({rank})")
    if d == 4 and rank >= 3:
        yield catalog_lookup(f"Dn({rank})")


def canonical_gram(h: GramMatrix) -> tuple[GramMatrix, tuple[tuple[int, ...], ...]]:
    """Basis-independent canonical form (c, w) with w^T h w == c.

    Complete for rank <= 4 (lex-min over saturated bounded bases) and for
    scaled copies of the catalog lattices at higher rank; other high-rank
    lattices fall back to their LLL-reduced Gram, which is deterministic per
    presentation but not guaranteed canonical across presentations.
    """
    if h.rank == 0:
        return h, ()
    s = 0
    for row in h.entries:
        for x in row:
            s = gcd(s, x)
    base = h if s == 1 else make_gram(h.rank, [[x // s for x in row] for row in h.entries])
    if base.rank <= _LEXMIN_MAX_RANK:
        rows = _lexmin_basis(base)
        w = intlinalg.transpose(rows)
        entries = intlinalg.mat_mul(intlinalg.mat_mul(rows, base.entries), intlinalg.transpose(rows))
        canon = GramMatrix(base.rank, intlinalg.as_matrix(entries))
        return (scale(canon, s) if s > 1 else canon), intlinalg.as_matrix(w)
    for cand in _catalog_candidates(base.rank, det(base)):
        iso = is_isometric(base, cand)
        if iso is not None:
            w = intlinalg.integer_inverse(iso.matrix)
            return (scale(cand, s) if s > 1 else cand), w
    red = lll_reduce(h)
    return red.gram, red.transform


@lru_cache(maxsize=4096)
def indecomposable_summands(g: GramMatrix) -> Decomposition:
    """Unique decomposition into indecomposable orthogonal summands."""
    if g.rank == 0:
        return Decomposition(g, (), ())
    red = lll_reduce(g)
    r = red.gram
    vectors = _indecomposable_vectors(r)
    comps = _components(r, vectors)
    pieces = []
    for comp in comps:
        basis = intlinalg.hnf_basis(comp)
        raw_entries = [[intlinalg.gram_product(a, r.entries, b) for b in basis] for a in basis]
        raw = GramMatrix(len(basis), intlinalg.as_matrix(raw_entries))
        canon, w = canonical_gram(raw)
        # columns of the embedding: original coordinates of the canonical basis
        cols = intlinalg.mat_mul(
            intlinalg.mat_mul(red.transform, intlinalg.transpose(basis)), w
        )
        pieces.append((canon, Embedding(canon, g, intlinalg.as_matrix(cols))))
    # the spans must be pairwise orthogonal and sum to the whole lattice
    for (c1, e1), (c2, e2) in itertools.combinations(pieces, 2):
        for a in e1.basis_vectors:
            ga = intlinalg.mat_vec(g.entries, a)
            assert all(intlinalg.dot(b, ga) == 0 for b in e2.basis_vectors), \
                "summand spans are not orthogonal"
    all_rows = [list(v) for _, e in pieces for v in e.basis_vectors]
    assert intlinalg.row_span_index(all_rows, g.rank) == 1, \
        "summand spans do not fill the lattice"
    pieces.sort(key=lambda p: (p[0].rank, det(p[0]), p[0].entries))
    summands = tuple(p[0] for p in pieces)
    embeddings = tuple(p[1] for p in pieces)
    reassembled = direct_sum_all(summands)
    block = intlinalg.as_matrix(intlinalg.transpose(
        [list(v) for e in embeddings for v in e.basis_vectors]
    ))
    Embedding(reassembled, g, block)  # validates the reassembly certificate
    assert abs(intlinalg.bareiss_det(block)) == 1
    return Decomposition(g, summands, embeddings)


def is_indecomposable(g: GramMatrix) -> bool:
    return len(indecomposable_summands(g).summands) == 1


def _search_cost(g: GramMatrix) -> tuple[int, int]:
    return (g.rank, max(lll_reduce(g).gram.diagonal) if g.rank else 0)


def coprime(g1: GramMatrix, g2: GramMatrix) -> bool:
    """True iff the lattices share no indecomposable summand.

    Decomposes the cheaper side first; a summand s can only occur in the
    other side b if b contains a vector as short as s's minimal vector, which
    prunes the expensive cases (Leech never gets decomposed just to compare
    against a root lattice).
    """
    if g1.rank == 0 or g2.rank == 0:
        return True
    a, b = sorted((g1, g2), key=_search_cost)
    dec_a = indecomposable_summands(a)
    dec_b = None
    seen: set[tuple] = set()
    for s in dec_a.summands:
        key = (s.rank, det(s), s.entries)
        if key in seen:
            continue
        seen.add(key)
        if s.rank > b.rank:
            continue
        if not short_vectors(b, min_norm(s)).vectors:
            continue  # b has no vector as short as s's minimal vector
        if dec_b is None:
            dec_b = indecomposable_summands(b)
        if any(is_isometric(s, t) is not None for t in dec_b.summands):
            return False
    return True
