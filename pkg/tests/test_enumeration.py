"""Short-vector enumeration against hand values and the box oracle."""

import random
from fractions import Fraction

import pytest

from latcrit import catalog, det, make_gram, parse_expr
from latcrit.embedding import represents
from latcrit.enumeration import (
    SingularSublattice,
    generated_by_norms_up_to,
    min_dual_norm,
    min_norm,
    project_onto_sublattice,
    short_vectors,
    smallest_generating_norm,
)
from latcrit.oracles import box_min_norm, box_short_vectors, random_gram
from latcrit.reduction import randomize_basis


def test_short_vectors_z2_hand_enumeration():
    svl = short_vectors(parse_expr("diag(1,1)"), 2)
    assert svl.vectors == (
        ((0, 1), 1),
        ((1, 0), 1),
        ((1, -1), 2),
        ((1, 1), 2),
    )


def test_short_vectors_scaled_is_empty_below_min():
    assert short_vectors(make_gram(1, [[2]]), 1).vectors == ()


def test_e8_root_count():
    svl = short_vectors(catalog("E8"), 2)
    assert svl.count_of_norm(2, both_signs=True) == 240
    # independent box scan; the even-coordinate presentation keeps the
    # Cauchy-Schwarz box small, unlike the Cartan basis
    from latcrit.catalog import d_plus

    glue = d_plus(8)
    assert len(box_short_vectors(glue, 2)) == 120
    assert short_vectors(glue, 2).count_of_norm(2, both_signs=True) == 240


def test_agrees_with_box_oracle_on_random_grams():
    rng = random.Random(11)
    for _ in range(60):
        g = random_gram(rng, rng.randint(1, 4), 5)
        bound = max(g.diagonal)
        assert short_vectors(g, bound).vectors == tuple(box_short_vectors(g, bound))


def test_fractional_bound():
    svl = short_vectors(parse_expr("diag(1,1)"), Fraction(3, 2))
    assert svl.norms() == [1, 1]


def test_min_norm_examples():
    assert min_norm(catalog("E8")) == 2
    assert min_norm(make_gram(1, [[1]])) == 1
    g = randomize_basis(parse_expr("diag(3,5,7)"), 9)
    assert min_norm(g) == box_min_norm(g, 7)


def test_min_dual_norm_examples():
    assert min_dual_norm(make_gram(1, [[2]])) == Fraction(1, 2)
    assert min_dual_norm(catalog("E6")) == Fraction(4, 3)
    # oracle: box scan of the rescaled dual Gram 3 * E6^-1
    from latcrit.core import adjugate_gram

    adj = adjugate_gram(catalog("E6"))
    assert box_min_norm(adj, max(adj.diagonal)) == 4
    assert min_dual_norm(catalog("E7")) == Fraction(3, 2)


def test_min_dual_norm_self_dual_matches_min_norm():
    e8 = catalog("E8")
    assert min_dual_norm(e8) == min_norm(e8) == 2


def test_generated_by_norms_examples():
    assert generated_by_norms_up_to(parse_expr("Zn(3)"), 1)
    assert generated_by_norms_up_to(catalog("E8"), 2)
    assert not generated_by_norms_up_to(parse_expr("diag(1,4)"), 1)
    assert smallest_generating_norm(parse_expr("diag(1,4)")) == 4
    assert smallest_generating_norm(catalog("An(2)")) == 2
    assert smallest_generating_norm(catalog("Dn(4)")) == 2


def test_isometry_invariance_of_enumeration():
    base = catalog("An(3)")
    ref = [short_vectors(base, m).count_of_norm(m) for m in (1, 2, 3, 4)]
    for seed in range(20):
        g = randomize_basis(base, seed)
        assert det(g) == det(base)
        assert [short_vectors(g, m).count_of_norm(m) for m in (1, 2, 3, 4)] == ref


def test_projection_block_orthogonality():
    q = parse_expr("E8 + Zn(1)")
    emb = represents(q, catalog("E8"))
    v = tuple(int(i == 8) for i in range(9))
    coords, norm, in_dual = project_onto_sublattice(q, emb.basis_vectors, v)
    assert norm == 0 and all(c == 0 for c in coords) and in_dual


def test_projection_z2_examples():
    q = parse_expr("diag(1,1)")
    coords, norm, _ = project_onto_sublattice(q, [(1, 0)], (1, 1))
    assert coords == (Fraction(1),) and norm == 1
    a2 = catalog("An(2)")
    coords, norm, _ = project_onto_sublattice(a2, [(1, 0)], (0, 1))
    assert coords == (Fraction(-1, 2),) and norm == Fraction(1, 2)


def test_projection_contract_and_shrinkage():
    rng = random.Random(5)
    for _ in range(25):
        q = random_gram(rng, 3, 4)
        basis = [(1, 0, 0), (0, 1, 0)]
        v = tuple(rng.randint(-3, 3) for _ in range(3))
        if all(x == 0 for x in v):
            continue
        coords, norm, in_dual = project_onto_sublattice(q, basis, v)
        assert in_dual
        # (pi(v), w) == (v, w) for each sublattice basis vector w
        for j, w in enumerate(basis):
            lhs = sum(
                coords[k] * q.inner(basis[k], w) for k in range(len(basis))
            )
            assert lhs == q.inner(v, w)
        assert norm <= q.norm(v)
        in_span = v[2] == 0
        assert (norm == q.norm(v)) == in_span


def test_projection_singular_sublattice():
    q = parse_expr("diag(1,1)")
    with pytest.raises(SingularSublattice):
        project_onto_sublattice(q, [(1, 0), (2, 0)], (0, 1))
