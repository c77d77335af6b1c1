import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from sympy import Poly, Rational, eye, zeros

from ...utils import make_rng, rand_fraction
from ..exact import LAMBDA, coordinate_gens, coordinate_pairs, multipoly, sympy_to_scalar
from .config import BracketConfig


logger = logging.getLogger(__name__)

SYMBOLIC = "symbolic"
SAMPLED = "sampled"
MODES = (SYMBOLIC, SAMPLED)

HALF = Rational(1, 2)

Pair = Tuple[int, int]


def _s(i: int, j: int, r: int):
    return coordinate_gens(r)[coordinate_pairs(r).index((i, j))]


def _ordered_bracket(i, j, k, l, r):
    """{s_ij, s_kl} for (i, j) before (k, l): i < k, or i = k and j < l."""
    s = lambda a, b: _s(a, b, r)
    if i == k:
        return HALF * s(i, j) * s(i, l) - s(j, l)
    if j == l:
        return HALF * s(i, j) * s(k, j) - s(i, k)
    if j == k:
        return s(i, l) - HALF * s(i, j) * s(j, l)
    if k < j < l:
        return s(i, l) * s(k, j) - s(i, k) * s(j, l)
    # j < k (disjoint) or l < j (nested)
    return 0


def bracket_coords(i: int, j: int, k: int, l: int, r: int):
    """{s_ij, s_kl} as a polynomial over Q in the coordinates s_ab, a < b."""
    if not (1 <= i < j <= r and 1 <= k < l <= r):
        raise ValueError(f"bad coordinate pair ({i},{j}), ({k},{l}) for r={r}")
    if (i, j) == (k, l):
        return multipoly(0, r)
    if (i, j) < (k, l):
        return multipoly(_ordered_bracket(i, j, k, l, r), r)
    return -multipoly(_ordered_bracket(k, l, i, j, r), r)


class BracketTable:
    """
    All coordinate brackets {s_p, s_q} for rank r, extended to polynomials by
    the chain rule.
    """
    def __init__(self, r: int):
        assert 2 <= r <= 9, "coordinate names are single-digit"
        self.r = r
        self.pairs = coordinate_pairs(r)
        self.gens = coordinate_gens(r)
        self._table: Dict[Tuple[Pair, Pair], object] = {
            (p, q): bracket_coords(*p, *q, r) for p in self.pairs for q in self.pairs
        }

    def __call__(self, p: Pair, q: Pair):
        return self._table[(p, q)]

    def cleared(self, p: Pair, q: Pair):
        """Integer form: (denominator, polynomial with integer coefficients)."""
        denom, poly = self(p, q).clear_denoms()
        return int(denom), poly

    def gen(self, p: Pair):
        return multipoly(self.gens[self.pairs.index(p)], self.r)


def bracket_poly(F, G, table: BracketTable):
    """Σ ∂F/∂s_p {s_p, s_q} ∂G/∂s_q."""
    F = F if isinstance(F, Poly) else multipoly(F, table.r)
    G = G if isinstance(G, Poly) else multipoly(G, table.r)
    dF = [F.diff(g) for g in table.gens]
    dG = [G.diff(g) for g in table.gens]
    total = multipoly(0, table.r)
    for a, p in enumerate(table.pairs):
        if dF[a].is_zero:
            continue
        for b, q in enumerate(table.pairs):
            if dG[b].is_zero:
                continue
            entry = table(p, q)
            if entry.is_zero:
                continue
            total += dF[a] * entry * dG[b]
    return total


def evaluate_at(poly, point: Dict[Pair, Fraction], table: BracketTable) -> Fraction:
    """Exact value at a rational point, term by term in Fractions."""
    values = [point[p] for p in table.pairs]
    total = Fraction(0)
    for monom, coeff in poly.terms():
        term = Fraction(sympy_to_scalar(coeff))
        for v, e in zip(values, monom):
            if e:
                term *= v ** e
        total += term
    return total


def table_at(table: BracketTable, point: Dict[Pair, Fraction]) -> Dict[Tuple[Pair, Pair], Fraction]:
    return {(p, q): evaluate_at(table(p, q), point, table) for p in table.pairs for q in table.pairs}


def gradient_at(F, table: BracketTable, point: Dict[Pair, Fraction]) -> List[Fraction]:
    return [evaluate_at(F.diff(g), point, table) for g in table.gens]


def pair_at(dF: List[Fraction], dG: List[Fraction], values, table: BracketTable) -> Fraction:
    """The bivector applied to two gradients already evaluated at a point."""
    total = Fraction(0)
    for a, p in enumerate(table.pairs):
        if not dF[a]:
            continue
        for b, q in enumerate(table.pairs):
            if dG[b]:
                total += dF[a] * values[(p, q)] * dG[b]
    return total


def bracket_at(F, G, table: BracketTable, point: Dict[Pair, Fraction]) -> Fraction:
    """{F, G} at a point, from gradients and table entries evaluated separately."""
    return pair_at(gradient_at(F, table, point), gradient_at(G, table, point), table_at(table, point), table)


def random_point(rng, r: int, height: int = BracketConfig.coord_height) -> Dict[Pair, Fraction]:
    return {p: rand_fraction(rng, height) for p in coordinate_pairs(r)}


def _resolve_mode(r: int, mode: Optional[str]) -> str:
    mode = mode or (SYMBOLIC if r <= BracketConfig.symbolic_max_r else SAMPLED)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def _jacobiator(table: BracketTable, a: Pair, b: Pair, c: Pair):
    ga, gb, gc = table.gen(a), table.gen(b), table.gen(c)
    return (bracket_poly(ga, table(b, c), table)
            + bracket_poly(gb, table(c, a), table)
            + bracket_poly(gc, table(a, b), table))


def _jacobiator_at(table: BracketTable, a: Pair, b: Pair, c: Pair, values, grads) -> Fraction:
    """{a,{b,c}} = Σ_q {s_a, s_q} ∂_q{s_b, s_c}, with every factor already evaluated."""
    total = Fraction(0)
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        for q, d in zip(table.pairs, grads[(y, z)]):
            if d:
                total += values[(x, q)] * d
    return total


def check_jacobi(r: int, mode: Optional[str] = None, samples: int = BracketConfig.samples,
                 seed: int = 0, workers: int = BracketConfig.workers) -> dict:
    """
    {x,{y,z}} + {y,{z,x}} + {z,{x,y}} = 0 for every triple of coordinates,
    as polynomials or at random rational points.
    """
    mode = _resolve_mode(r, mode)
    table = BracketTable(r)
    triples = list(combinations(table.pairs, 3))
    failures = []
    if mode == SYMBOLIC:
        with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
            futures = {executor.submit(_jacobiator, table, *t): t for t in triples}
            for fut in as_completed(futures):
                if not fut.result().is_zero:
                    failures.append(futures[fut])
        checked = len(triples)
    else:
        rng = make_rng(seed)
        bad = set()
        dtable = {(p, q): [table(p, q).diff(g) for g in table.gens] for p in table.pairs for q in table.pairs}
        for _ in range(samples):
            point = random_point(rng, r)
            values = table_at(table, point)
            grads = {pq: [evaluate_at(d, point, table) for d in ds] for pq, ds in dtable.items()}
            bad.update(t for t in triples if _jacobiator_at(table, *t, values, grads) != 0)
        failures = list(bad)
        checked = len(triples) * samples
    failures.sort()
    if failures:
        logger.error(f"Jacobi identity fails for r={r} on {len(failures)} triples")
    return {"r": r, "mode": mode, "checked": checked, "failures": [list(map(list, t)) for t in failures],
            "ok": not failures}


def casimir_coefficients(r: int) -> List:
    """Coefficients of det(λI + s^-1 s^T), low to high, as polynomials in the s_ij."""
    gens = coordinate_gens(r)
    pairs = coordinate_pairs(r)
    N = zeros(r, r)
    for g, (i, j) in zip(gens, pairs):
        N[i - 1, j - 1] = g
    # s = I + N with N nilpotent, so s^-1 = Σ (-N)^m stays polynomial
    inv, term = eye(r), eye(r)
    for _ in range(r - 1):
        term = -term * N
        inv += term
    M = inv * (eye(r) + N).T
    char = (-M).charpoly(LAMBDA)
    return [multipoly(c.expand(), r) for c in reversed(char.all_coeffs())]


def check_casimir(r: int, mode: Optional[str] = None, samples: int = BracketConfig.samples,
                  seed: int = 0) -> dict:
    """Every coefficient of p(λ) Poisson-commutes with every coordinate."""
    mode = _resolve_mode(r, mode)
    table = BracketTable(r)
    coeffs = casimir_coefficients(r)
    live = [(degree, c) for degree, c in enumerate(coeffs) if not c.is_ground]
    units = [[Fraction(int(a == b)) for b in range(len(table.pairs))] for a in range(len(table.pairs))]
    bad = set()
    if mode == SYMBOLIC:
        checked = len(live) * len(table.pairs)
        for degree, c in live:
            bad.update((degree, q) for q in table.pairs if not bracket_poly(c, table.gen(q), table).is_zero)
    else:
        checked = len(live) * len(table.pairs) * samples
        rng = make_rng(seed)
        for _ in range(samples):
            point = random_point(rng, r)
            values = table_at(table, point)
            for degree, c in live:
                dc = gradient_at(c, table, point)
                bad.update((degree, q) for q, unit in zip(table.pairs, units)
                           if pair_at(dc, unit, values, table) != 0)
    failures = [[degree, list(q)] for degree, q in sorted(bad)]
    if failures:
        logger.error(f"Casimir check fails for r={r}: {failures}")
    return {"r": r, "mode": mode, "checked": checked, "failures": failures, "ok": not failures}
