import pytest

from stokeslab.src.stokeslab.errors import MalformedInputError
from stokeslab.src.stokeslab.models.diophantine import DTDVDB_FIXED
from stokeslab.src.stokeslab.models.mutation import (
    EQUIVALENT,
    INEQUIVALENT,
    LEFT,
    NOT_CONNECTED,
    RIGHT,
    TRUNCATED,
    mutate,
    mutation_equivalent,
    mutation_relations,
    nondegeneracy_flags,
    serre_operator,
)
from stokeslab.src.stokeslab.models.stokes import StokesMat, act_word, random_stokes, serre_matrix, sign_flip
from stokeslab.src.stokeslab.utils import rand_int


def test_rank2_is_fixed():
    s = StokesMat.from_rows([[1, 2], [0, 1]])
    assert mutate(LEFT, 1, s) == s
    assert mutate(RIGHT, 1, s) == s


def test_mutate_all_ones(all_ones3):
    assert mutate(LEFT, 1, all_ones3).to_rows() == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    assert mutate(RIGHT, 1, all_ones3).to_rows() == [[1, 1, 1], [0, 1, 0], [0, 0, 1]]


def test_mutate_bad_direction(all_ones3):
    with pytest.raises(ValueError):
        mutate("X", 1, all_ones3)


def test_relations(rng):
    for _ in range(20):
        r = rand_int(rng, 2, 6)
        assert mutation_relations(random_stokes(rng, r))["ok"]


def test_serre_operator(all_ones3):
    assert serre_operator(all_ones3) == serre_matrix(all_ones3)


def test_equivalent_to_itself(all_ones3):
    res = mutation_equivalent(all_ones3, all_ones3)
    assert res["status"] == EQUIVALENT
    assert len(res["word"]) == 0


def test_equivalent_finds_word(all_ones3):
    target = mutate(LEFT, 1, all_ones3)
    res = mutation_equivalent(all_ones3, target)
    assert res["status"] == EQUIVALENT
    assert str(res["word"]) == "L1"


def test_equivalent_longer_word(all_ones4):
    target = mutate(RIGHT, 3, mutate(LEFT, 2, mutate(LEFT, 1, all_ones4)))
    res = mutation_equivalent(all_ones4, target, depth=6)
    assert res["status"] == EQUIVALENT
    assert act_word(res["word"], all_ones4) == target
    assert len(res["word"]) <= 3


def test_equivalent_signed(all_ones3):
    flipped = sign_flip(2, all_ones3)
    res = mutation_equivalent(all_ones3, flipped, signed=True)
    assert res["status"] == EQUIVALENT
    assert act_word(res["word"], all_ones3) == flipped


def test_inequivalent_by_invariant(all_ones4):
    res = mutation_equivalent(DTDVDB_FIXED, all_ones4)
    assert res["status"] == INEQUIVALENT
    assert res["word"] is None
    assert len(res["invariants"]) == 2


def test_not_connected_within_depth(all_ones3):
    res = mutation_equivalent(all_ones3, mutate(LEFT, 1, all_ones3), depth=0)
    assert res["status"] == NOT_CONNECTED


def test_truncated(all_ones3):
    target = mutate(LEFT, 1, mutate(LEFT, 1, all_ones3))
    assert target not in [mutate(d, i, all_ones3) for d in (LEFT, RIGHT) for i in (1, 2)]
    res = mutation_equivalent(all_ones3, target, budget=1)
    assert res["status"] == TRUNCATED


def test_rank_mismatch(all_ones3, all_ones4):
    with pytest.raises(MalformedInputError):
        mutation_equivalent(all_ones3, all_ones4)


def test_nondegeneracy_flags():
    out = nondegeneracy_flags(StokesMat.identity(3))
    assert "disc(p)=0" in out["flags"]
    assert "p(-1)=0" in out["flags"]
    assert out["heuristic"]
    out = nondegeneracy_flags(StokesMat.from_rows([[1, 2, 0], [0, 1, 0], [0, 0, 1]]))
    assert "s12=±2" in out["flags"]


def test_nondegeneracy_all_ones(all_ones4):
    assert nondegeneracy_flags(all_ones4)["flags"] == []
