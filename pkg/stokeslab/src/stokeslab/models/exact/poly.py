import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy import Poly, Rational, Symbol, gcd, resultant, symbols

from .matrix import Mat, Scalar, from_domain, normalize


logger = logging.getLogger(__name__)

LAMBDA = Symbol("λ")


def unipoly(coeffs_low_to_high: Sequence) -> Poly:
    return Poly(list(reversed([Rational(Fraction(c).numerator, Fraction(c).denominator)
                               for c in coeffs_low_to_high])), LAMBDA)


def coefficients(p: Poly) -> List[Scalar]:
    """Low-to-high coefficient list of a univariate polynomial."""
    return [sympy_to_scalar(c) for c in reversed(p.all_coeffs())]


def sympy_to_scalar(c) -> Scalar:
    c = Rational(c)
    return normalize(Fraction(int(c.p), int(c.q)))


def to_sympy(x) -> Rational:
    x = Fraction(x)
    return Rational(x.numerator, x.denominator)


def charpoly(M: Mat) -> Poly:
    """det(λI - M), exact."""
    if not M.is_square:
        raise ValueError(f"charpoly of a non-square {M.rows}x{M.cols} matrix")
    dm = M.to_domain_matrix()
    K = dm.domain
    return Poly([K.to_sympy(c) for c in dm.charpoly()], LAMBDA)


def evaluate(p: Poly, t) -> Scalar:
    return sympy_to_scalar(p.eval(to_sympy(t)))


def discriminant(p: Poly) -> Scalar:
    """
    disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)
    """
    n = p.degree()
    if n < 1:
        raise ValueError("discriminant of a constant polynomial")
    res = resultant(p.as_expr(), p.diff(LAMBDA).as_expr(), LAMBDA)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sympy_to_scalar(sign * Rational(res) / p.LC())


def has_repeated_root(p: Poly) -> bool:
    return Poly(gcd(p, p.diff(LAMBDA)), LAMBDA).degree() > 0


def is_reciprocal(p: Poly) -> bool:
    c = coefficients(p)
    return c == c[::-1]


def _compact(expr) -> str:
    return str(expr).replace("**", "^").replace(" ", "")


def format_poly(p: Poly) -> str:
    """Factored rendering such as "(λ+1)^3" or "(λ^2-3*λ+1)"."""
    content, factors = p.factor_list()
    factors = sorted(factors, key=lambda fm: (fm[0].degree(), _compact(fm[0].as_expr())))
    parts = []
    for f, mult in factors:
        body = f"({_compact(f.as_expr())})"
        parts.append(body if mult == 1 else f"{body}^{mult}")
    lead = sympy_to_scalar(content)
    if not parts:
        return str(lead)
    if lead == -1:
        return "-" + "".join(parts)
    if lead != 1:
        return f"{lead}*" + "".join(parts)
    return "".join(parts)


@lru_cache(maxsize=None)
def coordinate_pairs(r: int) -> Tuple[Tuple[int, int], ...]:
    """Index pairs (i, j), 1 <= i < j <= r, in lexicographic order."""
    return tuple((i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1))


@lru_cache(maxsize=None)
def coordinate_gens(r: int):
    """Symbols s_ij generating the coordinate ring of rank-r Stokes matrices."""
    if r > 9:
        raise ValueError("coordinate names are single-digit, r <= 9")
    names = [f"s{i}{j}" for i, j in coordinate_pairs(r)]
    return tuple(symbols(names))


def multipoly(expr, r: int) -> Poly:
    return Poly(expr, *coordinate_gens(r))
