from fractions import Fraction

import pytest

from stokeslab.src.stokeslab.models.exact import (
    LAMBDA,
    Mat,
    charpoly,
    coefficients,
    cofactor_det,
    det,
    discriminant,
    evaluate,
    format_poly,
    has_repeated_root,
    is_reciprocal,
    normalize,
    rank_exact,
    unipoly,
    unitriangular_inverse,
)
from stokeslab.src.stokeslab.utils import rand_int


def test_normalize_collapses_integral_fractions():
    assert normalize(Fraction(6, 3)) == 2
    assert isinstance(normalize(Fraction(6, 3)), int)
    assert normalize(Fraction(1, 2)) == Fraction(1, 2)


def test_det_matches_cofactor_expansion(rng):
    for _ in range(30):
        n = rand_int(rng, 1, 5)
        M = Mat.from_rows([[rand_int(rng, -4, 4) for _ in range(n)] for _ in range(n)])
        assert det(M) == cofactor_det(M)


def test_det_rational():
    M = Mat.from_rows([[Fraction(1, 2), 1], [1, 4]])
    assert det(M) == 1


def test_rank_exact():
    assert rank_exact(Mat.from_rows([[1, 2], [2, 4]])) == 1
    assert rank_exact(Mat.identity(3)) == 3
    assert rank_exact(Mat.zeros(2, 3)) == 0


def test_unitriangular_inverse_is_integral(rng):
    for _ in range(20):
        n = rand_int(rng, 2, 6)
        rows = [[1 if i == j else (rand_int(rng, -5, 5) if j > i else 0) for j in range(n)] for i in range(n)]
        M = Mat.from_rows(rows)
        inv = unitriangular_inverse(M)
        assert inv.is_integral()
        assert M @ inv == Mat.identity(n)


def test_charpoly_identity():
    assert coefficients(charpoly(Mat.identity(2))) == [1, -2, 1]


def test_charpoly_matches_determinant(rng):
    for _ in range(20):
        n = rand_int(rng, 1, 4)
        M = Mat.from_rows([[rand_int(rng, -4, 4) for _ in range(n)] for _ in range(n)])
        t = Fraction(rand_int(rng, -6, 6), rand_int(rng, 1, 3))
        assert evaluate(charpoly(M), t) == cofactor_det(Mat.identity(n).scale(t) - M)


def test_rank_is_transpose_invariant(rng):
    for _ in range(30):
        rows, cols = rand_int(rng, 1, 4), rand_int(rng, 1, 4)
        M = Mat.from_rows([[rand_int(rng, -1, 1) for _ in range(cols)] for _ in range(rows)])
        assert rank_exact(M) == rank_exact(M.T)


def test_charpoly_rejects_non_square():
    with pytest.raises(ValueError):
        charpoly(Mat.zeros(2, 3))


def test_discriminant():
    assert discriminant(unipoly([1, -3, 1])) == 5
    cube = unipoly([1, 3, 3, 1])
    assert discriminant(cube) == 0
    assert has_repeated_root(cube)
    assert not has_repeated_root(unipoly([1, -3, 1]))


def test_discriminant_vanishes_on_repeated_roots(rng):
    for _ in range(30):
        p = unipoly([rand_int(rng, -3, 3) for _ in range(rand_int(rng, 1, 3))] + [rand_int(rng, 1, 3)])
        if rand_int(rng, 0, 1):
            p = p * unipoly([rand_int(rng, -2, 2), 1]) ** 2
        assert (discriminant(p) == 0) == has_repeated_root(p)


def test_discriminant_of_constant_raises():
    with pytest.raises(ValueError):
        discriminant(unipoly([3]))


def test_format_poly_factored():
    assert format_poly(unipoly([1, 3, 3, 1])) == "(λ+1)^3"
    assert format_poly(unipoly([1, 1, 1, 1, 1])) == "(λ^4+λ^3+λ^2+λ+1)"


def test_reciprocal_and_evaluate():
    p = unipoly([1, 1, 1, 1, 1])
    assert is_reciprocal(p)
    assert not is_reciprocal(unipoly([1, 2]))
    assert evaluate(p, 1) == 5
    assert evaluate(p, -1) == 1
    assert p.gens == (LAMBDA,)
