import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Tuple

from ...errors import MalformedInputError
from ..exact import Mat, coefficients, discriminant, evaluate, format_poly
from ..quandle import BraidWord
from ..stokes import StokesMat, act_word, coxeter_charpoly, serre_matrix, sign_flip, stokes_braid_act


logger = logging.getLogger(__name__)

LEFT = "L"
RIGHT = "R"
DIRECTIONS = (LEFT, RIGHT)

EQUIVALENT = "equivalent"
INEQUIVALENT = "inequivalent-invariant"
NOT_CONNECTED = "not-connected-within-depth"
TRUNCATED = "truncated"


def empty_word() -> BraidWord:
    return BraidWord(pos=LEFT, neg=RIGHT)


def mutate(direction: str, i: int, s: StokesMat) -> StokesMat:
    """L_i is the braid move σ_i on Gram matrices, R_i its inverse."""
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown mutation direction {direction!r}")
    return stokes_braid_act(i, 1 if direction == LEFT else -1, s)


def serre_operator(s: StokesMat) -> Mat:
    """Numerical Serre operator v -> s^-1 s^T v."""
    return serre_matrix(s)


def mutation_relations(s: StokesMat) -> dict:
    """L_i R_i = R_i L_i = id, the braid relation for L and R, and far commutation."""
    r = s.r
    inverse, braid, far = True, True, True
    for i in range(1, r):
        if mutate(RIGHT, i, mutate(LEFT, i, s)) != s or mutate(LEFT, i, mutate(RIGHT, i, s)) != s:
            inverse = False
        if i + 1 < r:
            for d in DIRECTIONS:
                lhs = mutate(d, i, mutate(d, i + 1, mutate(d, i, s)))
                rhs = mutate(d, i + 1, mutate(d, i, mutate(d, i + 1, s)))
                braid = braid and lhs == rhs
        for j in range(i + 2, r):
            far = far and mutate(LEFT, i, mutate(LEFT, j, s)) == mutate(LEFT, j, mutate(LEFT, i, s))
    return {"inverse": inverse, "braid": braid, "far_commutation": far, "ok": inverse and braid and far}


def _neighbors(s: StokesMat, signed: bool) -> List[Tuple[int, int, StokesMat]]:
    out = [(i, sign, stokes_braid_act(i, sign, s)) for i in range(1, s.r) for sign in (1, -1)]
    if signed:
        out += [(i, 0, sign_flip(i, s)) for i in range(1, s.r + 1)]
    return out


def mutation_equivalent(
    s1: StokesMat,
    s2: StokesMat,
    depth: int = 6,
    budget: int = 100_000,
    signed: bool = False,
    workers: int = 1,
) -> dict:
    """
    Bidirectional BFS over L/R moves. Distinct Coxeter polynomials are a proof
    of inequivalence; otherwise the answer is a word or "not connected within
    depth", which is not a proof.
    """
    if s1.r != s2.r:
        raise MalformedInputError(f"rank mismatch: {s1.r} vs {s2.r}")
    base = {"depth": depth, "signed": signed}
    if s1 == s2:
        return {**base, "status": EQUIVALENT, "word": empty_word(), "explored": 1}
    p1, p2 = coxeter_charpoly(s1), coxeter_charpoly(s2)
    if p1 != p2:
        return {**base, "status": INEQUIVALENT, "word": None, "explored": 0,
                "invariants": [format_poly(p1), format_poly(p2)]}

    # key -> word from the side's root
    sides: List[Dict[Tuple, Tuple[StokesMat, BraidWord]]] = [
        {s1.key(): (s1, empty_word())},
        {s2.key(): (s2, empty_word())},
    ]
    frontiers = [[s1], [s2]]
    truncated = False
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        for step in range(depth):
            side = step % 2
            seen, other = sides[side], sides[1 - side]
            expanded = list(executor.map(lambda x: _neighbors(x, signed), frontiers[side]))
            nxt = []
            for parent, children in zip(frontiers[side], expanded):
                word = seen[parent.key()][1]
                for i, sign, child in children:
                    if child.key() not in seen:
                        seen[child.key()] = (child, word.append(i, sign))
                        nxt.append(child)
            frontiers[side] = sorted(nxt, key=lambda x: x.key())
            meet = sorted(set(seen) & set(other))
            if meet:
                m = meet[0]
                w1, w2 = sides[0][m][1], sides[1][m][1]
                word = w1 + w2.inverse()
                assert act_word(word, s1) == s2, "connecting word does not reach the target"
                return {**base, "status": EQUIVALENT, "word": word, "explored": len(sides[0]) + len(sides[1])}
            if len(sides[0]) + len(sides[1]) > budget:
                truncated = True
                break
    explored = len(sides[0]) + len(sides[1])
    if truncated:
        logger.warning(f"mutation search stopped after {explored} matrices")
    return {**base, "status": TRUNCATED if truncated else NOT_CONNECTED, "word": None, "explored": explored}


def nondegeneracy_flags(s: StokesMat) -> dict:
    """
    Computable warning signs of a degenerate collection. These are heuristics:
    an empty list does not certify nondegeneracy.
    """
    p = coxeter_charpoly(s)
    flags = []
    if discriminant(p) == 0:
        flags.append("disc(p)=0")
    for i in range(1, s.r):
        if s.get(i, i + 1) in (2, -2):
            flags.append(f"s{i}{i + 1}=±2")
    if evaluate(p, 1) == 0:
        flags.append("p(1)=0")
    if evaluate(p, -1) == 0:
        flags.append("p(-1)=0")
    return {"p": format_poly(p), "coefficients": coefficients(p), "flags": flags, "heuristic": True}
