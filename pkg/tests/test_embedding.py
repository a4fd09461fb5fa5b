"""Representation search, isometry, complements, and unimodular splitting."""

import itertools
import random

import pytest

from latcrit import catalog, det, direct_sum, make_gram, parse_expr
from latcrit.embedding import (
    Embedding,
    NotUnimodular,
    compose,
    embedding_direct_sum,
    identity_embedding,
    is_isometric,
    orthogonal_complement,
    represents,
    unimodular_summand_split,
)
from latcrit.enumeration import min_norm
from latcrit.intlinalg import mat_mul, transpose
from latcrit.oracles import brute_force_represents, random_gram
from latcrit.reduction import randomize_basis

A = parse_expr("diag(1,1,2)")
B = parse_expr("diag(1,1)")
C = parse_expr("2*Zn(3)")


def _certificate_ok(e: Embedding) -> bool:
    check = mat_mul(mat_mul(transpose(e.matrix), e.target.entries), e.matrix)
    return tuple(check) == e.source.entries


def test_a_represents_c_with_verified_certificate():
    e = represents(A, C)
    assert e is not None and _certificate_ok(e)
    # the image Gram is exactly 2*I3
    assert e.source == C and e.target == A


def test_neither_companion_embeds_a():
    assert represents(B, A) is None  # rank 2 < 3
    assert represents(C, A) is None  # no norm-1 vectors


def test_embedding_validation_rejects_bad_matrix():
    with pytest.raises(Exception):
        Embedding(B, A, ((1, 0), (0, 1), (0, 1)))


def test_is_isometric_with_randomized_basis():
    for expr in ("diag(1,1,2)", "An(2)", "E8"):
        g = parse_expr(expr)
        r = randomize_basis(g, 13)
        e = is_isometric(g, r)
        assert e is not None and _certificate_ok(e)


def test_is_isometric_invariant_mismatches():
    assert is_isometric(catalog("E8"), parse_expr("Zn(8)")) is None  # min norm 2 vs 1
    assert is_isometric(make_gram(1, [[2]]), make_gram(1, [[1]])) is None  # det differs


def test_orthogonal_complement_examples():
    z2 = parse_expr("diag(1,1)")
    e1 = Embedding(make_gram(1, [[1]]), z2, ((1,), (0,)))
    assert orthogonal_complement(z2, e1) == make_gram(1, [[1]])
    ediag = Embedding(make_gram(1, [[2]]), z2, ((1,), (1,)))
    assert orthogonal_complement(z2, ediag) == make_gram(1, [[2]])


def test_unimodular_split_examples():
    z2 = parse_expr("diag(1,1)")
    e1 = Embedding(make_gram(1, [[1]]), z2, ((1,), (0,)))
    comp, cert = unimodular_summand_split(z2, e1)
    assert comp == make_gram(1, [[1]]) and _certificate_ok(cert)

    e8 = catalog("E8")
    q = direct_sum(e8, catalog("An(2)"))
    emb = represents(q, e8)
    comp, cert = unimodular_summand_split(q, emb)
    assert is_isometric(comp, catalog("An(2)")) is not None
    assert _certificate_ok(cert)


def test_unimodular_split_recovers_unit_summand():
    a9 = parse_expr("E8 + Zn(1)")
    for seed in (0, 1, 2):
        q = randomize_basis(a9, seed)
        emb = represents(q, catalog("E8"))
        assert emb is not None
        comp, cert = unimodular_summand_split(q, emb)
        assert comp == make_gram(1, [[1]])
        assert _certificate_ok(cert)


def test_split_requires_unimodular_source():
    z2 = parse_expr("diag(1,1)")
    ediag = Embedding(make_gram(1, [[2]]), z2, ((1,), (1,)))
    with pytest.raises(NotUnimodular):
        unimodular_summand_split(z2, ediag)


def test_agrees_with_matrix_enumeration_oracle():
    rng = random.Random(23)
    pairs = 0
    for _ in range(40):
        q = random_gram(rng, rng.randint(1, 3), 4)
        l = random_gram(rng, rng.randint(1, 3), 4)
        pairs += 1
        assert (represents(q, l) is not None) == brute_force_represents(q, l)
    assert pairs == 40


def test_transitivity_spot_check():
    pool = [
        parse_expr(e)
        for e in ("diag(1)", "diag(2)", "diag(1,1)", "An(2)", "diag(1,2)",
                   "diag(1,1,2)", "2*Zn(3)", "diag(1,1,1)", "Dn(3)")
    ]
    rng = random.Random(77)
    triples = 0
    while triples < 100:
        q, l1, l2 = (pool[rng.randrange(len(pool))] for _ in range(3))
        e1 = represents(q, l1)
        e2 = represents(l1, l2)
        if e1 is None or e2 is None:
            continue
        triples += 1
        assert represents(q, l2) is not None
        composed = compose(e1, e2)
        assert _certificate_ok(composed)


def test_embedding_direct_sum_and_identity():
    e1 = represents(A, C)
    e2 = identity_embedding(catalog("E8"))
    e = embedding_direct_sum(e1, e2)
    assert e.source == direct_sum(C, catalog("E8"))
    assert e.target == direct_sum(A, catalog("E8"))
    assert _certificate_ok(e)


def test_min_norm_respected_in_image():
    e8 = catalog("E8")
    e = represents(direct_sum(e8, e8), e8)
    assert e is not None
    for col in e.basis_vectors:
        assert e.target.norm(col) >= min_norm(e.source)


def test_projection_shadow_with_mixed_summands():
    # any unit vector projects to zero on any embedded E8 copy, so the
    # randomized form always contains E8 + <1>
    from latcrit.enumeration import project_onto_sublattice, short_vectors

    e8 = catalog("E8")
    a9 = direct_sum(e8, make_gram(1, [[1]]))
    pool = ["", "diag(2)", "An(2)", "diag(1,1)", "diag(1,2)"]
    count = 0
    for extra in pool:
        base = a9 if not extra else direct_sum(a9, parse_expr(extra))
        for seed in range(10):
            q = randomize_basis(base, seed)
            emb = represents(q, e8)
            assert emb is not None
            v = short_vectors(q, 1).of_norm(1)[0]
            coords, norm, in_dual = project_onto_sublattice(q, emb.basis_vectors, v)
            assert norm == 0 and all(c == 0 for c in coords) and in_dual
            assert represents(q, a9) is not None
            count += 1
    assert count == 50
