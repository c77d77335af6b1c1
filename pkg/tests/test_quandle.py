import pytest

from stokeslab.src.stokeslab.errors import MalformedInputError
from stokeslab.src.stokeslab.models.quandle import (
    BraidWord,
    DihedralQuandle,
    IntegerCoreQuandle,
    TrivialQuandle,
    axiom_check,
    braid_act,
    braid_letters,
    braid_step,
    orbit_enumerate,
    pseudo_coxeter,
    random_word,
)


def test_parse_and_render():
    w = BraidWord.parse("s1 S2 e3")
    assert w.letters == ((1, 1), (2, -1), (3, 0))
    assert str(w) == "s1 S2 e3"
    assert w.has_flips()
    assert str(w.inverse()) == "e3 s2 S1"


def test_parse_custom_alphabet():
    w = BraidWord.parse("L1 R2", pos="L", neg="R")
    assert w.letters == ((1, 1), (2, -1))
    assert str(w) == "L1 R2"


@pytest.mark.parametrize("text", ["s0", "x1", "s1 ,s2", "s"])
def test_parse_rejects_garbage(text):
    with pytest.raises(MalformedInputError):
        BraidWord.parse(text)


def test_check_index_range():
    BraidWord.parse("s2 e3").check(3)
    with pytest.raises(IndexError):
        BraidWord.parse("s3").check(3)
    with pytest.raises(IndexError):
        BraidWord.parse("e4").check(3)


def test_axioms_hold_for_dihedral_and_integer_core():
    d5 = DihedralQuandle(5)
    triples = [(u, v, w) for u in d5.elements() for v in d5.elements() for w in d5.elements()]
    assert axiom_check(d5, triples)["ok"]
    assert axiom_check(IntegerCoreQuandle(), [(1, 2, 3), (-4, 0, 7), (5, 5, -5)])["ok"]


def test_braid_step_on_integer_core():
    model = IntegerCoreQuandle()
    assert braid_step(model, 1, 1, (1, 2)) == (0, 1)
    assert braid_step(model, 1, -1, (0, 1)) == (1, 2)


def test_braid_relations_on_tuples(rng):
    model = DihedralQuandle(7)
    for _ in range(50):
        tup = tuple(int(x) for x in rng.integers(0, 7, size=4))
        for i in (1, 2):
            lhs = braid_act(BraidWord(((i, 1), (i + 1, 1), (i, 1))), tup, model)
            rhs = braid_act(BraidWord(((i + 1, 1), (i, 1), (i + 1, 1))), tup, model)
            assert lhs == rhs
        assert braid_act(BraidWord(((1, 1), (3, 1))), tup, model) == braid_act(BraidWord(((3, 1), (1, 1))), tup, model)


def test_word_and_inverse_cancel(rng):
    model = DihedralQuandle(5)
    for _ in range(20):
        w = random_word(rng, 4, 12)
        tup = (0, 1, 3, 4)
        assert braid_act(w.inverse(), braid_act(w, tup, model), model) == tup


def test_pseudo_coxeter_is_braid_invariant():
    model = IntegerCoreQuandle()
    base = pseudo_coxeter((1, 2), model)
    assert (base.left, base.right, base.parity) == (-1, 1, 0)
    assert pseudo_coxeter(braid_step(model, 1, 1, (1, 2)), model) == base


def test_pseudo_coxeter_needs_group():
    with pytest.raises(TypeError):
        pseudo_coxeter((1, 2), TrivialQuandle())


def test_orbit_enumerate_dihedral():
    model = DihedralQuandle(3)
    store = orbit_enumerate([(0, 1)], 2, lambda i, s, t: braid_step(model, i, s, t), key=lambda t: t)
    assert sorted(store.elements()) == [(0, 1), (1, 2), (2, 0)]
    rep = store.representative()
    assert rep.element == (0, 1)
    assert len(rep.word) == 0
    for entry in store.entries():
        assert braid_act(entry.word, (0, 1), model) == entry.element


def test_orbit_enumerate_budget_truncates():
    model = IntegerCoreQuandle()
    store = orbit_enumerate([(0, 1, 3)], 3, lambda i, s, t: braid_step(model, i, s, t), key=lambda t: t, budget=10)
    assert store.truncated
    assert store.steps <= 10


def test_orbit_enumerate_is_worker_independent():
    model = DihedralQuandle(5)
    move = lambda i, s, t: braid_step(model, i, s, t)
    one = orbit_enumerate([(0, 1, 2)], 3, move, key=lambda t: t, workers=1)
    many = orbit_enumerate([(0, 1, 2)], 3, move, key=lambda t: t, workers=4)
    assert [(e.element, str(e.word)) for e in one.entries()] == [(e.element, str(e.word)) for e in many.entries()]


def bounded_core_orbit(seed):
    model = IntegerCoreQuandle()
    return orbit_enumerate([seed], 3, lambda i, s, t: braid_step(model, i, s, t), key=lambda t: t,
                           bound=lambda t: max(abs(c) for c in t) <= 5)


def test_orbit_enumerate_is_idempotent():
    store = bounded_core_orbit((0, 1, 3))
    assert not store.truncated
    orbit = set(store.elements())
    assert len(orbit) > 1
    for x in sorted(orbit):
        assert set(bounded_core_orbit(x).elements()) == orbit


def test_pseudo_coxeter_constant_on_orbit():
    model = IntegerCoreQuandle()
    store = bounded_core_orbit((0, 1, 3))
    base = pseudo_coxeter((0, 1, 3), model)
    assert all(pseudo_coxeter(x, model) == base for x in store.elements())


def test_braid_letters():
    assert braid_letters(3) == [(1, 1), (1, -1), (2, 1), (2, -1)]
