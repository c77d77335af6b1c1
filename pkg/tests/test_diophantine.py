import pytest

from stokeslab.src.stokeslab.errors import MalformedInputError
from stokeslab.src.stokeslab.models.diophantine import (
    DTDVDB_FIXED,
    TAG_MARKOFF,
    TAG_ORIGIN,
    TAG_REDUCIBLE,
    dehn_discriminant,
    dehn_discriminant_symmetric,
    dehn_flags,
    dtdvdb_family,
    enumerate_r3,
    enumerate_r4,
    fiber_points,
    four_holed_sphere_equation,
    markoff_reduce,
    markoff_tag,
    parabola_coefficient,
    rank4_growth,
    slice_conditions,
    slice_enumerate_r3,
    stokes_of,
    surface_points_r3,
    triple_move,
    triple_of,
    verify_dtdvdb,
)
from stokeslab.src.stokeslab.models.stokes import StokesMat, markoff_k, stokes_braid_act


def walk(t, word):
    for i, sign in word:
        t = triple_move(i, sign, t)
    return t


def test_triple_move_matches_matrix_action():
    assert triple_move(1, 1, (1, 1, 1)) == (1, 1, 0)
    for t in [(1, 1, 1), (2, 5, 5), (3, -1, 4), (0, 7, -2)]:
        for i in (1, 2):
            for sign in (1, -1):
                moved = triple_of(stokes_braid_act(i, sign, stokes_of(t)))
                assert moved == triple_move(i, sign, t)
                assert triple_move(i, -sign, moved) == t
                assert markoff_k(*moved) == markoff_k(*t)


def test_reduce_reducible_plateau():
    rep, word, tag = markoff_reduce((2, 5, 5))
    assert rep == (2, 5, 5)
    assert len(word) == 0
    assert tag == TAG_REDUCIBLE


def test_reduce_markoff_triples():
    rep, word, tag = markoff_reduce((3, 3, 6))
    assert rep == (3, 3, 3)
    assert tag == TAG_MARKOFF
    assert walk((3, 3, 6), word) == rep

    rep, word, tag = markoff_reduce((3, -3, -3))
    assert rep == (3, -3, -3)
    assert tag == TAG_MARKOFF


def test_reduce_origin():
    assert markoff_reduce((0, 0, 0))[2] == TAG_ORIGIN


def test_reduce_word_reaches_rep():
    for t in [(3, 6, 15), (1, 1, 2), (4, 4, 7), (2, 3, 3)]:
        rep, word, _ = markoff_reduce(t)
        assert walk(t, word) == rep
        assert sum(c * c for c in rep) <= sum(c * c for c in t)


def test_markoff_tag_off_special_levels():
    assert markoff_tag((1, 1, 1)) is None
    assert markoff_tag((1, 1, -1)) == TAG_REDUCIBLE


def test_surface_points_lie_on_surface():
    for k in (-2, 0, 3):
        for x in range(-4, 5):
            for t in surface_points_r3(k, 6, x):
                assert markoff_k(*t) == k
                assert max(abs(c) for c in t) <= 6


def test_enumerate_markoff_level():
    report = enumerate_r3(-2, 8)
    out = report.to_json()
    assert [0, 0, 0] in out["triples"]
    assert [3, 3, 3] in out["triples"]
    assert set(out["tags"]) <= {TAG_ORIGIN, TAG_MARKOFF}
    assert out["certified"] is False
    assert report.degenerate


def test_enumerate_cayley_level_is_reducible():
    report = enumerate_r3(2, 4)
    assert report.count > 0
    assert set(report.tags) == {TAG_REDUCIBLE}


@pytest.mark.parametrize("k", [-1, 0, 1, 3, 5])
def test_class_count_stable_in_height(k):
    assert enumerate_r3(k, 10).count == enumerate_r3(k, 20).count


def test_enumerate_r3_classifies_every_point():
    report = enumerate_r3(1, 6)
    assert sum(report.sizes) == report.points
    assert report.classify(stokes_of((1, 1, 1))) is None
    for t in surface_points_r3(1, 6, 2):
        assert report.classify(stokes_of(t)) is not None


def test_enumerate_r3_worker_independent():
    assert enumerate_r3(1, 6, workers=1).to_json() == enumerate_r3(1, 6, workers=3).to_json()


@pytest.mark.parametrize("k,count", [(3, 2), (6, 4), (4, 0)])
def test_slice_enumerate(k, count):
    assert slice_enumerate_r3(k, 2, 6).count == count


@pytest.mark.parametrize("k,sign", [(2, 2), (3, 3)])
def test_slice_enumerate_rejects(k, sign):
    with pytest.raises(MalformedInputError):
        slice_enumerate_r3(k, sign, 4)


def test_enumerate_r4_all_ones(all_ones4):
    report = enumerate_r4(1, -1, 1)
    assert report.classify(all_ones4) is not None
    assert report.disc == 125
    assert not report.degenerate


def test_enumerate_r4_unipotent_origin():
    report = enumerate_r4(0, -4, 0)
    assert report.count == 1
    assert report.representatives[0] == StokesMat.identity(4)
    assert report.degenerate


def test_enumerate_r4_worker_independent():
    assert enumerate_r4(1, -1, 1, workers=1).to_json() == enumerate_r4(1, -1, 1, workers=2).to_json()


def test_enumerate_r4_merge_bound():
    report = enumerate_r4(1, -1, 1, max_slack=4)
    assert 3 <= report.merge_bound <= 5
    assert report.to_json()["merge_bound"] == report.merge_bound
    capped = enumerate_r4(1, -1, 1, slack=2, max_slack=2)
    assert capped.merge_bound == 3
    assert capped.count >= report.count


def test_rank4_growth_record():
    report = rank4_growth(0, -4, [0])
    assert report.growth == {"heights": [0], "counts": [1], "stable": True, "grows": False}
    assert report.to_json()["growth"]["counts"] == [1]


@pytest.mark.slow
def test_rank4_class_count_trends():
    nondegenerate = rank4_growth(1, -1, (3, 4, 5))
    degenerate = rank4_growth(0, -4, (3, 4, 5))
    assert not nondegenerate.degenerate
    assert nondegenerate.growth["stable"]
    assert degenerate.degenerate
    assert degenerate.growth["grows"]
    assert degenerate.classify(DTDVDB_FIXED) is not None


def test_dtdvdb_solutions():
    assert verify_dtdvdb(20)["ok"]
    assert dtdvdb_family(2).to_rows()[0] == [1, 2, 4, 2]
    assert DTDVDB_FIXED.to_rows()[1] == [0, 1, 0, 2]


@pytest.mark.slow
def test_dtdvdb_fixed_is_classified():
    assert enumerate_r4(0, -4, 4).classify(DTDVDB_FIXED) is not None


def test_dehn_discriminant():
    assert dehn_discriminant(3, 1, 2) == (5, False)
    assert dehn_discriminant_symmetric(3, 3, 2) == dehn_discriminant(3, 1, 2)
    for t in (2, -2):
        value, square = dehn_discriminant(t, 1, 5)
        assert value == 0 and square


def test_dehn_flags():
    assert dehn_flags(2, 2, 1) == ["t=±2", "d_k=0"]
    assert dehn_flags(3, 2, 0) == []


def test_fiber_points():
    assert fiber_points(2, 3, 2, 0, 30) == []
    assert fiber_points(0, 3, 2, 0, 10) == [(3, 3)]
    for x in range(-3, 4):
        for y, z in fiber_points(x, 1, 1, -2, 12):
            assert four_holed_sphere_equation(x, y, z, 1, 1, -2)


def test_parabola_coefficient_factors():
    for t in range(-4, 5):
        for k1 in range(-3, 4):
            for k2 in range(-3, 4):
                for v in (1, -1):
                    expected = -v * (t - v * k1) * (t - v * k2)
                    assert parabola_coefficient(t, k1 + k2, k1 * k2, v) == expected


def test_slice_conditions():
    cond = slice_conditions(3, 2, 0)
    assert cond["d_k"] == 4
    assert cond["part1"] and cond["part2"] and not cond["part3"]
    assert cond["parabola"] == {1: parabola_coefficient(3, 2, 0, 1), -1: parabola_coefficient(3, 2, 0, -1)}
