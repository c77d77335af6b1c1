import pytest

from stokeslab.src.stokeslab.errors import BudgetExceededError, MalformedInputError
from stokeslab.src.stokeslab.models.bridge import (
    CORE_SL2,
    PHI,
    PSI,
    BoundaryTraces,
    b_braid_act,
    boundary_monodromy,
    c_braid_act,
    finite_model_compare,
    goldman_coordinates,
    goldman_invariants,
    goldman_membership,
    parse_tuple,
    predicted_charpoly,
    rep_to_stokes,
    surface_membership,
    trace_identity_check,
    transport,
)
from stokeslab.src.stokeslab.models.clifford import Mat2, random_sl2
from stokeslab.src.stokeslab.models.exact import format_poly
from stokeslab.src.stokeslab.models.quandle import braid_step
from stokeslab.src.stokeslab.models.stokes import (
    closed_form,
    coxeter_charpoly,
    random_stokes,
    rank_filtration_level,
    stokes_braid_act,
)
from stokeslab.src.stokeslab.utils import rand_int


def random_rep(rng, r):
    return tuple(random_sl2(rng, rand_int(rng, 1, 6)) for _ in range(r - 1))


def test_parse_tuple():
    b = parse_tuple([[[1, 1], [0, 1]], [[2, 1], [1, 1]]])
    assert b == (Mat2(1, 1, 0, 1), Mat2(2, 1, 1, 1))


@pytest.mark.parametrize("data", [
    [[[1, 2], [3, 4]]],
    [[[1, 0.5], [0, 1]]],
    [[[1, 1, 0], [0, 1]]],
    "not a tuple",
])
def test_parse_tuple_rejects(data):
    with pytest.raises(MalformedInputError):
        parse_tuple(data)


def test_transport_phi_after_psi(rng):
    for r in (2, 3, 5):
        b = random_rep(rng, r)
        assert transport(PHI, transport(PSI, b)) == b


def test_transport_unknown_direction():
    with pytest.raises(ValueError):
        transport("chi", (Mat2.identity(),))


def test_phi_is_equivariant(rng):
    for _ in range(30):
        r = rand_int(rng, 2, 5)
        a = tuple(random_sl2(rng) for _ in range(r))
        i, sign = rand_int(rng, 1, r - 1), 1 if rand_int(rng, 0, 1) else -1
        assert transport(PHI, b_braid_act(i, sign, a)) == c_braid_act(i, sign, transport(PHI, a))


def test_b_braid_act_is_core_quandle_move(rng):
    a = tuple(random_sl2(rng) for _ in range(3))
    moved = b_braid_act(1, 1, a)
    assert moved == (a[0] @ a[1].inverse() @ a[0], a[0], a[2])
    assert moved == braid_step(CORE_SL2, 1, 1, a)


def test_rep_to_stokes_entries():
    u = Mat2(1, 1, 0, 1)
    s = rep_to_stokes((u, u))
    assert s.to_rows() == [[1, 2, 2], [0, 1, 2], [0, 0, 1]]


def test_rep_to_stokes_equivariance(rng):
    for _ in range(50):
        r = rand_int(rng, 2, 6)
        b = random_rep(rng, r)
        i, sign = rand_int(rng, 1, r - 1), 1 if rand_int(rng, 0, 1) else -1
        assert rep_to_stokes(c_braid_act(i, sign, b)) == stokes_braid_act(i, sign, rep_to_stokes(b))


def test_boundary_matches_closed_forms(rng):
    for _ in range(40):
        b3 = random_rep(rng, 3)
        s3 = rep_to_stokes(b3)
        traces = boundary_monodromy(b3)
        assert traces.parity == 1
        assert traces.k == closed_form(s3)["k"]
        assert surface_membership(s3, traces)

        b4 = random_rep(rng, 4)
        s4 = rep_to_stokes(b4)
        traces = boundary_monodromy(b4)
        cf = closed_form(s4)
        assert traces.e1e2() == (cf["e1"], cf["e2"])
        assert surface_membership(s4, traces)
        assert goldman_membership(s4, traces)


def test_surface_membership_on_coordinates():
    assert surface_membership((3, 3, 3), BoundaryTraces.odd(-2))
    assert not surface_membership((3, 3, 3), BoundaryTraces.odd(2))
    assert surface_membership((1, 1, 1, 1, 1, 1), BoundaryTraces.from_symmetric(1, -1))
    with pytest.raises(ValueError):
        surface_membership((1, 2), BoundaryTraces.odd(0))


def test_boundary_traces_json():
    t = BoundaryTraces.even(2, 3)
    assert t.e1e2() == (5, 6)
    assert t.to_json() == {"parity": 0, "traces": [2, 3], "e1": 5, "e2": 6}


def test_goldman_agrees_on_arbitrary_matrices(rng):
    for _ in range(50):
        s = random_stokes(rng, 4, 4)
        cf = closed_form(s)
        assert goldman_invariants(s) == (cf["e1"], cf["e2"])


def test_goldman_coordinates(all_ones4):
    assert goldman_coordinates(all_ones4) == {"u": 1, "v": 0, "w": 1, "x": 1, "y": 1, "z": 1}


def test_predicted_charpoly_on_trace_images(rng):
    for r in (3, 4, 5, 6):
        for _ in range(10):
            b = random_rep(rng, r)
            s = rep_to_stokes(b)
            assert coxeter_charpoly(s) == predicted_charpoly(boundary_monodromy(b), r)
            assert rank_filtration_level(s) <= 4


def test_predicted_charpoly_unipotent():
    assert format_poly(predicted_charpoly(BoundaryTraces.odd(-2), 3)) == "(λ+1)^3"


def test_trace_identity(rng):
    pairs = [(random_sl2(rng), random_sl2(rng)) for _ in range(30)]
    res = trace_identity_check(pairs)
    assert res["ok"]
    assert res["checked"] == 30


@pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (3, 2)])
def test_finite_model_bijection(p, r):
    res = finite_model_compare(p, r)
    assert res["ok"]
    assert res["b_orbits"] == res["c_orbits"]
    assert res["phi_well_defined"] and res["psi_well_defined"]
    assert res["mutually_inverse"] and res["equivariant"]
    assert sum(size * count for size, count in res["orbit_sizes"].items()) == res["group_order"] ** r


def test_finite_model_worker_independent():
    assert finite_model_compare(2, 3, workers=1) == finite_model_compare(2, 3, workers=3)


def test_finite_model_budget():
    with pytest.raises(BudgetExceededError):
        finite_model_compare(3, 3, budget=1000)
