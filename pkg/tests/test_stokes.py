from fractions import Fraction

import pytest

from stokeslab.src.stokeslab.errors import DegenerateFormError, MalformedInputError
from stokeslab.src.stokeslab.models.clifford import SphereQuandle, random_sl2, rational_sphere_point
from stokeslab.src.stokeslab.models.exact import Mat, coefficients, format_poly
from stokeslab.src.stokeslab.models.quandle import BraidWord, braid_act, random_word
from stokeslab.src.stokeslab.models.stokes import (
    ADJ,
    PLAIN,
    StokesMat,
    act_word,
    alternate_charpoly,
    closed_form,
    coxeter_charpoly,
    coxeter_identity_check,
    gram_from_sphere,
    invariants,
    operator_charpoly,
    random_rational_stokes,
    random_stokes,
    rank_filtration_level,
    serre_matrix,
    sign_flip,
    stokes_braid_act,
)
from stokeslab.src.stokeslab.utils import rand_int


def test_from_rows_validates():
    with pytest.raises(MalformedInputError):
        StokesMat.from_rows([[1, 2], [1, 1]])
    with pytest.raises(MalformedInputError):
        StokesMat.from_rows([[1, 2, 3], [0, 1, 4]])
    with pytest.raises(MalformedInputError):
        StokesMat.from_rows([[1, "x"], [0, 1]])
    s = StokesMat.from_rows([[1, "1/2"], [0, 1]])
    assert s.get(1, 2) == Fraction(1, 2)
    assert not s.is_integral()


def test_packed_entries(all_ones3):
    s = StokesMat.from_rows([[1, 2, 3, 4], [0, 1, 5, 6], [0, 0, 1, 7], [0, 0, 0, 1]])
    assert s.upper == (2, 3, 4, 5, 6, 7)
    assert s.get(2, 4) == 6
    assert s.get(3, 1) == 0
    assert s.to_rows()[0] == [1, 2, 3, 4]


def test_braid_move_example(all_ones3):
    out = stokes_braid_act(1, 1, all_ones3)
    assert (out.get(1, 2), out.get(1, 3), out.get(2, 3)) == (1, 0, 1)


def test_braid_move_and_inverse(rng):
    for _ in range(50):
        r = rand_int(rng, 2, 6)
        s = random_stokes(rng, r)
        i = rand_int(rng, 1, r - 1)
        assert stokes_braid_act(i, -1, stokes_braid_act(i, 1, s)) == s
        assert stokes_braid_act(i, 1, stokes_braid_act(i, -1, s)) == s


def test_braid_relations(rng):
    for _ in range(50):
        r = rand_int(rng, 3, 6)
        s = random_stokes(rng, r)
        for i in range(1, r - 1):
            lhs = act_word(BraidWord(((i, 1), (i + 1, 1), (i, 1))), s)
            rhs = act_word(BraidWord(((i + 1, 1), (i, 1), (i + 1, 1))), s)
            assert lhs == rhs
        if r >= 4:
            assert act_word(BraidWord(((1, 1), (3, 1))), s) == act_word(BraidWord(((3, 1), (1, 1))), s)


def test_braid_move_index_range(all_ones3):
    with pytest.raises(IndexError):
        stokes_braid_act(3, 1, all_ones3)


def test_charpoly_is_invariant(rng):
    for _ in range(30):
        r = rand_int(rng, 2, 5)
        s = random_stokes(rng, r)
        w = random_word(rng, r, 15)
        assert coxeter_charpoly(act_word(w, s)) == coxeter_charpoly(s)


def test_charpoly_invariant_over_rationals(rng):
    for _ in range(10):
        s = random_rational_stokes(rng, 3)
        w = random_word(rng, 3, 6)
        assert coxeter_charpoly(act_word(w, s)) == coxeter_charpoly(s)


def test_sign_flip_preserves_charpoly(all_ones4):
    flipped = sign_flip(2, all_ones4)
    assert flipped.to_rows()[0] == [1, -1, 1, 1]
    assert flipped.to_rows()[1] == [0, 1, -1, -1]
    assert coxeter_charpoly(flipped) == coxeter_charpoly(all_ones4)
    assert act_word(BraidWord(((2, 0),)), all_ones4) == flipped


def test_gram_of_sphere_tuple_is_braid_equivariant(rng):
    model = SphereQuandle()
    for r in (3, 4):
        for _ in range(10):
            vs = [rational_sphere_point(3, rng=rng) for _ in range(r)]
            w = random_word(rng, r, 6)
            assert gram_from_sphere(braid_act(w, vs, model)) == act_word(w, gram_from_sphere(vs))


def test_rank_filtration_is_braid_invariant(rng):
    for r in (3, 4, 5):
        for _ in range(10):
            s = random_stokes(rng, r)
            w = random_word(rng, r, 12)
            assert rank_filtration_level(act_word(w, s)) == rank_filtration_level(s)


def test_markoff_invariants(markoff3):
    rec = invariants(markoff3)
    assert rec.k == -2
    assert format_poly(rec.p) == "(λ+1)^3"
    assert rec.disc == 0
    assert rec.to_json()["k"] == -2


def test_identity_invariants():
    rec = invariants(StokesMat.identity(3))
    assert rec.k == -2
    assert coefficients(rec.p) == [1, 3, 3, 1]


def test_rank4_all_ones(all_ones4):
    assert closed_form(all_ones4) == {"e1": 1, "e2": -1}
    rec = invariants(all_ones4)
    assert coefficients(rec.p) == [1, 1, 1, 1, 1]
    assert rec.disc != 0


def test_alternate_charpoly_convention(all_ones3):
    p = coefficients(coxeter_charpoly(all_ones3))
    alt = coefficients(alternate_charpoly(all_ones3))
    assert alt == [c * (-1) ** (n + 1) for n, c in enumerate(p)]


def test_serre_matrix():
    assert serre_matrix(StokesMat.identity(3)) == Mat.identity(3)
    s = StokesMat.from_rows([[1, 2], [0, 1]])
    assert serre_matrix(s).to_rows() == [[-3, -2], [2, 1]]
    assert coefficients(coxeter_charpoly(s)) == [1, -2, 1]


def test_gram_from_sphere_rank(rng):
    for m in (2, 3):
        vs = [rational_sphere_point(m, rng=rng) for _ in range(5)]
        s = gram_from_sphere(vs)
        assert rank_filtration_level(s) <= m


def test_coxeter_identity_witness():
    assert coxeter_identity_check(StokesMat.from_rows([[1, 1], [0, 1]]))["ok"]


def test_coxeter_identity_on_sphere_grams(rng):
    checked = 0
    for r in (3, 4, 5):
        for _ in range(5):
            s = gram_from_sphere([rational_sphere_point(r, rng=rng) for _ in range(r)])
            try:
                assert coxeter_identity_check(s)["ok"]
            except DegenerateFormError:
                continue
            checked += 1
    assert checked > 0


def test_coxeter_identity_degenerate():
    with pytest.raises(DegenerateFormError):
        coxeter_identity_check(StokesMat.from_rows([[1, 2], [0, 1]]))


@pytest.mark.parametrize("variant", [ADJ, PLAIN])
def test_operator_charpoly_closed_form(rng, variant):
    for _ in range(20):
        a, b = random_sl2(rng), random_sl2(rng)
        assert operator_charpoly(a, b, variant)["ok"]
