"""Kneser decomposition: uniqueness, soundness, idempotence, coprimality."""

import os

import pytest

from latcrit import catalog, det, parse_expr
from latcrit.decomposition import (
    canonical_gram,
    coprime,
    indecomposable_summands,
    is_indecomposable,
)
from latcrit.embedding import is_isometric
from latcrit.intlinalg import mat_mul, transpose
from latcrit.reduction import randomize_basis

slow = pytest.mark.skipif(
    os.environ.get("LAT_SLOW_TESTS", "") != "1",
    reason="set LAT_SLOW_TESTS=1 to enumerate the Leech minimal shell",
)


def test_zn2_splits_into_units():
    dec = indecomposable_summands(parse_expr("Zn(2)"))
    assert [s.entries for s in dec.summands] == [((1,),), ((1,),)]


def test_base_form_splits_as_defined():
    dec = indecomposable_summands(parse_expr("diag(1,1,2)"))
    assert [s.entries for s in dec.summands] == [((1,),), ((1,),), ((2,),)]


def test_randomized_mixed_sum_recovers_summands():
    g = randomize_basis(parse_expr("E8 + Zn(3) + An(2)"), 4)
    dec = indecomposable_summands(g)
    assert [(s.rank, det(s)) for s in dec.summands] == [(1, 1)] * 3 + [(2, 3), (8, 1)]
    assert is_isometric(dec.summands[3], catalog("An(2)")) is not None
    assert is_isometric(dec.summands[4], catalog("E8")) is not None


def test_summand_embeddings_verify_and_are_orthogonal():
    g = randomize_basis(parse_expr("An(2) + diag(2)"), 8)
    dec = indecomposable_summands(g)
    for piece, emb in zip(dec.summands, dec.embeddings):
        check = mat_mul(mat_mul(transpose(emb.matrix), g.entries), emb.matrix)
        assert tuple(check) == piece.entries
    v1 = dec.embeddings[0].basis_vectors
    v2 = dec.embeddings[1].basis_vectors
    assert all(g.inner(a, b) == 0 for a in v1 for b in v2)


def test_is_indecomposable_examples():
    assert is_indecomposable(catalog("E8"))
    assert is_indecomposable(parse_expr("diag(1)"))
    assert not is_indecomposable(parse_expr("diag(1,1)"))
    assert is_indecomposable(catalog("An(2)"))
    assert is_indecomposable(catalog("Dn(4)"))


def test_uniqueness_across_rebasings():
    for expr in ("E8 + Zn(3) + An(2)", "diag(1,1,2)", "Dn(4)^2"):
        g = parse_expr(expr)
        ref = indecomposable_summands(g).multiset_key()
        for seed in range(20):
            key = indecomposable_summands(randomize_basis(g, seed)).multiset_key()
            assert key == ref, f"{expr} seed {seed}"


def test_idempotence():
    dec = indecomposable_summands(randomize_basis(parse_expr("E8 + An(2)"), 3))
    for s in dec.summands:
        again = indecomposable_summands(s)
        assert again.summands == (s,)


def test_canonical_gram_scaled_lattices():
    g = parse_expr("2*An(2)")
    c1, _ = canonical_gram(randomize_basis(g, 1))
    c2, _ = canonical_gram(randomize_basis(g, 2))
    assert c1 == c2
    assert det(c1) == det(g)


def test_coprime_examples():
    e8 = catalog("E8")
    assert coprime(e8, parse_expr("diag(1)"))
    assert not coprime(parse_expr("E8 + Zn(1)"), parse_expr("diag(1)"))
    assert coprime(e8, parse_expr("Zn(8)"))
    assert not coprime(parse_expr("An(2) + diag(1)"), parse_expr("An(2) + diag(4)"))


def test_coprime_leech_fast_path():
    # settles via the missing-short-vector prune, no Leech decomposition
    assert coprime(catalog("Leech"), catalog("E8"))
    assert coprime(catalog("Leech"), parse_expr("Zn(4)"))


@slow
def test_leech_is_indecomposable_full_oracle():
    assert is_indecomposable(catalog("Leech"))


@slow
def test_lambda23_is_indecomposable():
    assert is_indecomposable(catalog("Lambda23"))
