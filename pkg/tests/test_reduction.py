"""LLL reduction invariants and the seeded basis randomizer."""

from latcrit import catalog, det, parse_expr
from latcrit.enumeration import min_norm, short_vectors
from latcrit.intlinalg import bareiss_det, mat_mul, transpose
from latcrit.reduction import is_lll_reduced, lll_reduce, randomize_basis


def test_already_reduced_is_identity():
    a = parse_expr("diag(1,1,2)")
    red = lll_reduce(a)
    assert red.gram == a
    assert red.transform == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_a2_is_reduced():
    g = parse_expr("An(2)")
    assert lll_reduce(g).gram == g
    assert is_lll_reduced(g)


def test_transform_certificate():
    for expr, seed in (("E8", 1), ("Dn(4) + diag(3)", 5), ("Leech", 2)):
        g = randomize_basis(parse_expr(expr), seed)
        red = lll_reduce(g)
        u = red.transform
        assert abs(bareiss_det(u)) == 1
        assert mat_mul(mat_mul(transpose(u), g.entries), u) == red.gram.entries
        assert is_lll_reduced(red.gram)


def test_randomize_basis_deterministic_and_isometric():
    g = parse_expr("E8 + Zn(1)")
    assert randomize_basis(g, 42) == randomize_basis(g, 42)
    assert randomize_basis(g, 42) != randomize_basis(g, 43)
    for seed in range(5):
        r = randomize_basis(g, seed)
        assert det(r) == det(g)


def test_randomized_e8_min_norm():
    e8 = catalog("E8")
    for seed in range(5):
        assert min_norm(randomize_basis(e8, seed)) == 2


def test_randomized_e8_reduces_to_all_two_diagonal():
    e8 = catalog("E8")
    for seed in range(20):
        red = lll_reduce(randomize_basis(e8, seed)).gram
        assert red.diagonal == (2,) * 8


def test_reduction_preserves_short_vector_counts():
    base = parse_expr("An(2) + diag(3)")
    ref = lll_reduce(base).gram
    ref_counts = [short_vectors(ref, m).count_of_norm(m) for m in range(1, 7)]
    for seed in range(20):
        g = lll_reduce(randomize_basis(base, seed)).gram
        assert det(g) == det(base)
        assert min_norm(g) == min_norm(base)
        counts = [short_vectors(g, m).count_of_norm(m) for m in range(1, 7)]
        assert counts == ref_counts
