"""Named lattices: Z^n, root lattices A_n / D_n / E6 / E7 / E8, Leech, Lambda23.

The Leech Gram matrix is derived at first use from the extended binary Golay
code (generator polynomial construction), not transcribed; Lambda23 is then
computed as the orthogonal complement of a minimal vector inside Leech.
"""

from __future__ import annotations

import re
from functools import lru_cache

from . import intlinalg
from .core import GramMatrix, UnknownName, det, make_gram
from .reduction import lll_reduce

_NAME_RE = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(?:\((\d+)\))?$")


def zn(n: int) -> GramMatrix:
    if n < 1:
        raise UnknownName("Zn parameter must be >= 1")
    return make_gram(n, intlinalg.identity(n))


def an(n: int) -> GramMatrix:
    """A_n root lattice (Cartan matrix of the A_n chain); determinant n+1."""
    if n < 1:
        raise UnknownName("An parameter must be >= 1")
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = -1
    return make_gram(n, rows)


def dn(n: int) -> GramMatrix:
    """D_n root lattice; determinant 4.  D_2 degenerates to <2> + <2>."""
    if n < 2:
        raise UnknownName("Dn parameter must be >= 2")
    if n == 2:
        return make_gram(2, [[2, 0], [0, 2]])
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
    for i in range(n - 2):
        rows[i][i + 1] = rows[i + 1][i] = -1
    rows[n - 3][n - 1] = rows[n - 1][n - 3] = -1
    return make_gram(n, rows)


def _e_series(n: int) -> GramMatrix:
    # Bourbaki numbering: chain 1-3-4-...-n with node 2 attached to node 4.
    edges = [(1, 3), (2, 4)] + [(k, k + 1) for k in range(3, n)]
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
    for a, b in edges:
        rows[a - 1][b - 1] = rows[b - 1][a - 1] = -1
    return make_gram(n, rows)


# --- extended binary Golay code -------------------------------------------

# generator polynomial x^11+x^10+x^6+x^5+x^4+x^2+1 of the [23,12,7] code
_GOLAY_POLY = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)  # coefficients of x^0..x^11


def _poly_divides_x23_minus_1() -> bool:
    # long division of x^23 + 1 by the generator over GF(2)
    rem = [0] * 23 + [1]
    rem[0] = 1
    for top in range(23, 10, -1):
        if rem[top]:
            for deg, coeff in enumerate(_GOLAY_POLY):
                rem[top - 11 + deg] ^= coeff
    return not any(rem)


def golay_generator_rows() -> list[list[int]]:
    """12 generator rows of the extended [24,12,8] Golay code, as 0/1 lists."""
    assert _poly_divides_x23_minus_1()
    rows = []
    for shift in range(12):
        row = [0] * 24
        for deg, coeff in enumerate(_GOLAY_POLY):
            row[shift + deg] = coeff
        row[23] = sum(row) % 2  # overall parity bit
        rows.append(row)
    return rows


def golay_codewords() -> list[int]:
    """All 4096 codewords as 24-bit integers."""
    gens = [sum(bit << i for i, bit in enumerate(row)) for row in golay_generator_rows()]
    words = [0]
    for g in gens:
        words += [w ^ g for w in words]
    return words


# --- Leech and Lambda23 ----------------------------------------------------

@lru_cache(maxsize=1)
def _leech_basis() -> tuple[tuple[int, ...], ...]:
    """Basis of the Leech lattice in coordinates scaled so norms are x.x/8.

    Generated by doubled Golay codewords, 4*D24, and the odd glue vector,
    then put into Hermite normal form.
    """
    gens: list[list[int]] = []
    for row in golay_generator_rows():
        gens.append([2 * b for b in row])
    first = [0] * 24
    first[0] = first[1] = 4
    gens.append(first)
    for i in range(23):
        v = [0] * 24
        v[i], v[i + 1] = 4, -4
        gens.append(v)
    gens.append([-3] + [1] * 23)
    basis = intlinalg.hnf_basis(gens)
    assert len(basis) == 24
    return intlinalg.as_matrix(basis)


@lru_cache(maxsize=1)
def _leech_raw_gram() -> GramMatrix:
    basis = _leech_basis()
    raw = intlinalg.mat_mul(basis, intlinalg.transpose(basis))
    rows = []
    for row in raw:
        assert all(x % 8 == 0 for x in row)
        rows.append([x // 8 for x in row])
    return make_gram(24, rows)


@lru_cache(maxsize=1)
def leech() -> GramMatrix:
    g = lll_reduce(_leech_raw_gram()).gram
    assert det(g) == 1
    return g


@lru_cache(maxsize=1)
def lambda23() -> GramMatrix:
    """Orthogonal complement in Leech of one minimal vector; determinant 4."""
    g = leech()
    v = _leech_minimal_vector()
    constraint = [intlinalg.mat_vec(g.entries, v)]
    kernel = intlinalg.kernel_basis(constraint)
    assert len(kernel) == 23
    raw = [
        [intlinalg.gram_product(a, g.entries, b) for b in kernel]
        for a in kernel
    ]
    out = lll_reduce(make_gram(23, raw)).gram
    assert det(out) == 4
    return out


def _leech_minimal_vector() -> tuple[int, ...]:
    """Coordinates (in the catalog basis) of a norm-4 vector of Leech."""
    basis = _leech_basis()
    target = [0] * 24
    target[0] = target[1] = 4  # x.x/8 == 4
    coords = intlinalg.solve_rational(intlinalg.transpose(basis), target)
    assert all(c.denominator == 1 for c in coords)
    v_hnf = tuple(int(c) for c in coords)
    # move through the LLL transform used when building the catalog Gram
    transform = lll_reduce(_leech_raw_gram()).transform
    inv = intlinalg.integer_inverse(transform)
    v = intlinalg.mat_vec(inv, v_hnf)
    g = leech()
    assert g.norm(v) == 4
    return v


def d_plus(n: int) -> GramMatrix:
    """Unimodular glue extension of D_n (n divisible by 4): D_n plus the
    all-halves vector.  d_plus(8) is E8 in its even-coordinate presentation.

    Not a named catalog entry; used for verification constructions.
    """
    if n % 4 != 0:
        raise UnknownName("d_plus needs n divisible by 4")
    gens = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 2, -2
        gens.append(v)
    v = [0] * n
    v[n - 2], v[n - 1] = 2, 2
    gens.append(v)
    gens.append([1] * n)  # the glue vector, doubled coordinates
    basis = intlinalg.hnf_basis(gens)
    raw = intlinalg.mat_mul(basis, intlinalg.transpose(basis))
    assert all(x % 4 == 0 for row in raw for x in row)
    return make_gram(n, [[x // 4 for x in row] for row in raw])


_FIXED = {
    "E6": lambda: _e_series(6),
    "E7": lambda: _e_series(7),
    "E8": lambda: _e_series(8),
    "Leech": leech,
    "Lambda23": lambda23,
}

_FAMILIES = {"Zn": zn, "An": an, "Dn": dn}


@lru_cache(maxsize=256)
def catalog(name: str) -> GramMatrix:
    """Look up a lattice by name: Zn(k), An(k), Dn(k), E6, E7, E8, Leech, Lambda23."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise UnknownName(f"bad lattice name: {name!r}")
    base, arg = m.group(1), m.group(2)
    if base in _FIXED:
        if arg is not None:
            raise UnknownName(f"{base} takes no parameter")
        return _FIXED[base]()
    if base in _FAMILIES:
        if arg is None:
            raise UnknownName(f"{base} needs a parameter, e.g. {base}(3)")
        return _FAMILIES[base](int(arg))
    raise UnknownName(f"unknown lattice name: {name!r}")


def catalog_names() -> list[str]:
    return ["Zn(k)", "An(k)", "Dn(k)", "E6", "E7", "E8", "Leech", "Lambda23"]
