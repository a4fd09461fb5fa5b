"""Gram algebra, catalog, text format, and the expression language."""

import pytest

from latcrit import (
    GramMatrix,
    NotPositiveDefinite,
    NotSymmetric,
    ParseError,
    UnknownName,
    catalog,
    det,
    direct_sum,
    dual_gram,
    gram_from_text,
    gram_to_text,
    make_gram,
    parse_expr,
    scale,
)
from latcrit.core import GramFormatError, adjugate_gram, diag_gram, direct_sum_all
from latcrit.exprs import format_expr, parse_lattice_expr


def test_make_gram_identity():
    g = make_gram(1, [[1]])
    assert g.rank == 1 and g.entries == ((1,),)


def test_make_gram_paper_rank3():
    a = make_gram(3, [[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert a == parse_expr("diag(1,1,2)")


def test_make_gram_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite) as exc:
        make_gram(2, [[1, 2], [2, 1]])
    assert exc.value.minor_index == 1 and exc.value.minor_value == -3


def test_make_gram_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        make_gram(2, [[1, 0], [1, 1]])


def test_det_examples():
    assert det(parse_expr("Zn(8)")) == 1
    assert det(catalog("E8")) == 1
    assert det(catalog("Lambda23")) == 4


def test_direct_sum_examples():
    b = direct_sum(make_gram(1, [[1]]), make_gram(1, [[1]]))
    assert b == parse_expr("diag(1,1)")
    a9 = direct_sum(catalog("E8"), catalog("Zn(1)"))
    assert a9.rank == 9 and det(a9) == 1
    g = parse_expr("diag(2,3)")
    assert direct_sum(g, GramMatrix(0, ())) == g
    assert direct_sum(GramMatrix(0, ()), g) == g


def test_direct_sum_det_multiplicative():
    g1, g2 = parse_expr("diag(2,3)"), catalog("An(2)")
    assert det(direct_sum(g1, g2)) == det(g1) * det(g2)


def test_scale_examples():
    assert scale(make_gram(1, [[1]]), 2) == make_gram(1, [[2]])
    assert scale(parse_expr("diag(1,1,1)"), 2) == parse_expr("2*Zn(3)")
    g = parse_expr("diag(1,2)")
    assert scale(g, 1) == g
    assert det(scale(g, 3)) == 3 ** g.rank * det(g)


def test_dual_gram_examples():
    d = dual_gram(make_gram(1, [[2]]))
    assert str(d.entries[0][0]) == "1/2"
    assert dual_gram(catalog("E8")).is_integral()
    a = parse_expr("diag(1,1,2)")
    dd = dual_gram(a)
    back = [[x * det(a) for x in row] for row in dd.entries]
    assert adjugate_gram(a).entries == tuple(tuple(int(x) for x in r) for r in back)


def test_dual_is_involution():
    for expr in ("diag(1,1,2)", "An(2)", "E6"):
        g = parse_expr(expr)
        dd = dual_gram(g)
        gg = [[x for x in row] for row in dd.entries]
        import latcrit.intlinalg as il

        inv = il.rational_inverse(gg)
        assert tuple(tuple(int(x) for x in row) for row in inv) == g.entries


def test_catalog_families():
    assert catalog("Zn(3)") == diag_gram([1, 1, 1])
    assert det(catalog("An(4)")) == 5
    assert det(catalog("Dn(4)")) == 4
    assert det(catalog("Dn(2)")) == 4
    assert det(catalog("E6")) == 3
    assert det(catalog("E7")) == 2
    leech = catalog("Leech")
    assert leech.rank == 24 and det(leech) == 1
    l23 = catalog("Lambda23")
    assert l23.rank == 23 and det(l23) == 4


def test_catalog_unknown():
    with pytest.raises(UnknownName):
        catalog("F4")
    with pytest.raises(UnknownName):
        catalog("Zn")
    with pytest.raises(UnknownName):
        catalog("E8(2)")


def test_golay_code_weights():
    from latcrit.catalog import golay_codewords

    weights = {}
    for w in golay_codewords():
        k = bin(w).count("1")
        weights[k] = weights.get(k, 0) + 1
    assert weights == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_parse_examples():
    assert parse_expr("diag(1,1,2)") == make_gram(3, [[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert parse_expr("E8 + Zn(1)") == direct_sum(catalog("E8"), catalog("Zn(1)"))
    assert parse_expr("2*Zn(3)") == parse_expr("diag(2,2,2)")
    assert parse_expr("Lambda23^1") == catalog("Lambda23")
    assert parse_expr("(diag(1) + diag(2))^2") == parse_expr("diag(1,2,1,2)")


def test_parse_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_expr("diag(1,,2)")
    assert exc.value.position == 7
    with pytest.raises(ParseError):
        parse_expr("E8 +")
    with pytest.raises(ParseError):
        parse_expr("diag(0)")
    with pytest.raises(UnknownName):
        parse_expr("Q7")


def test_parse_pretty_roundtrip():
    exprs = [
        "diag(1,1,2)",
        "E8 + Zn(1)",
        "2*Zn(3)",
        "Lambda23^2 + 3*diag(1,2)",
        "(E8 + An(2))^2",
        "2*(diag(1) + diag(3))",
    ]
    for text in exprs:
        ast = parse_lattice_expr(text)
        printed = format_expr(ast)
        assert parse_expr(printed) == parse_expr(text)
        assert format_expr(parse_lattice_expr(printed)) == printed


def test_gram_text_roundtrip():
    for expr in ("diag(1,1,2)", "E8", "An(3) + 2*Zn(2)"):
        g = parse_expr(expr)
        assert gram_from_text(gram_to_text(g)) == g


def test_gram_text_comments_and_errors():
    g = gram_from_text("# a comment\n2\n1 0\n# another\n0 3\n")
    assert g == parse_expr("diag(1,3)")
    with pytest.raises(GramFormatError):
        gram_from_text("2\n1 0\n")
    with pytest.raises(GramFormatError):
        gram_from_text("x\n")
    with pytest.raises(NotPositiveDefinite):
        gram_from_text("1\n-1\n")


def test_rank0_is_direct_sum_identity():
    zero = GramMatrix(0, ())
    assert det(zero) == 1
    assert direct_sum_all([]) == zero
