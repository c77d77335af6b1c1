import logging
from typing import Any, Callable, Sequence, Tuple

from ..quandle import BraidWord, orbit_enumerate


logger = logging.getLogger(__name__)


def greedy_descent(
    element,
    move: Callable[[int, int, Any], Any],
    letters: Sequence[Tuple[int, int]],
    norm: Callable[[Any], int],
    key: Callable[[Any], Any],
    word: BraidWord = BraidWord(),
) -> Tuple[Any, BraidWord]:
    """
    Applies the move with the smallest resulting norm (ties: least key) while
    it strictly lowers the norm. Norms are non-negative integers, so this stops.
    """
    current = norm(element)
    while True:
        best = None
        for i, sign in letters:
            nxt = move(i, sign, element)
            cand = (norm(nxt), key(nxt))
            if best is None or cand < best[0]:
                best = (cand, i, sign, nxt)
        if best is None or best[0][0] >= current:
            return element, word
        (current, _), i, sign, element = best
        word = word.append(i, sign)


def plateau_canonical(
    element,
    r: int,
    move: Callable[[int, int, Any], Any],
    letters: Sequence[Tuple[int, int]],
    norm: Callable[[Any], int],
    key: Callable[[Any], Any],
    word: BraidWord = BraidWord(),
) -> Tuple[Any, BraidWord]:
    """
    Least element (by key) among those reachable from `element` through
    norm-preserving moves, with the word reaching it. Finite for integral points.
    """
    n0 = norm(element)
    store = orbit_enumerate([element], r, move, key, bound=lambda u: norm(u) == n0,
                            letters=letters, empty_word=word)
    rep = store.representative()
    return rep.element, rep.word


def reduce_to_canonical(element, r, move, letters, norm, key, word: BraidWord = BraidWord()):
    low, word = greedy_descent(element, move, letters, norm, key, word)
    return plateau_canonical(low, r, move, letters, norm, key, word)
