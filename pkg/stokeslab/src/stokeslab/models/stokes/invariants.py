import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from sympy import Poly

from ...errors import DegenerateFormError, InternalInvariantError
from ..exact import (
    LAMBDA,
    Mat,
    Scalar,
    charpoly,
    coefficients,
    det,
    discriminant,
    format_poly,
    is_reciprocal,
    rank_exact,
    unipoly,
    unitriangular_inverse,
)
from ..clifford import SphereVec, pairing
from .stokes import StokesMat


logger = logging.getLogger(__name__)


def serre_matrix(s: StokesMat) -> Mat:
    """s^-1 s^T."""
    M = s.to_mat()
    return unitriangular_inverse(M) @ M.T


def coxeter_charpoly(s: StokesMat) -> Poly:
    """p(λ) = det(λI + s^-1 s^T)."""
    p = charpoly(-serre_matrix(s))
    if not is_reciprocal(p):
        raise InternalInvariantError(f"non-reciprocal Coxeter polynomial {p} for {s.to_rows()}")
    return p


def alternate_charpoly(s: StokesMat) -> Poly:
    """det(λI - s^-1 s^T), the λ -> -λ convention."""
    return charpoly(serre_matrix(s))


def markoff_k(x, y, z) -> Scalar:
    return x * x + y * y + z * z - x * y * z - 2


def rank4_e1(a, b, c, d, e, f) -> Scalar:
    """k1 + k2 = ac + bd - ef."""
    return a * c + b * d - e * f


def rank4_long(a, b, c, d, e, f) -> Scalar:
    """The quartic whose value minus 4 is k1 k2."""
    return (a * a + b * b + c * c + d * d + e * e + f * f
            - a * b * e - a * d * f - b * c * f - c * d * e + a * b * c * d)


def rank4_e2(a, b, c, d, e, f) -> Scalar:
    return rank4_long(a, b, c, d, e, f) - 4


def rank4_coords(s: StokesMat):
    """(a, b, c, d, e, f) = (s12, s23, s34, s14, s13, s24)."""
    return s.get(1, 2), s.get(2, 3), s.get(3, 4), s.get(1, 4), s.get(1, 3), s.get(2, 4)


def r3_poly(k) -> Poly:
    """(λ+1)(λ²-kλ+1)."""
    return Poly((LAMBDA + 1) * (LAMBDA ** 2 - k * LAMBDA + 1), LAMBDA)


def r4_poly(e1, e2) -> Poly:
    return unipoly([1, -e2, e1 * e1 - 2 * e2 - 2, -e2, 1])


@dataclass(frozen=True)
class InvariantRecord:
    r: int
    p: Poly
    k: Optional[Scalar] = None
    e1: Optional[Scalar] = None
    e2: Optional[Scalar] = None
    alt_p: Optional[Poly] = None

    @property
    def disc(self) -> Scalar:
        return discriminant(self.p)

    def to_json(self):
        out = {
            "r": self.r,
            "p": format_poly(self.p),
            "coefficients": coefficients(self.p),
            "disc": self.disc,
        }
        if self.k is not None:
            out["k"] = self.k
        if self.e1 is not None:
            out["e1"] = self.e1
            out["e2"] = self.e2
        if self.alt_p is not None:
            out["alt_p"] = format_poly(self.alt_p)
        return out


def closed_form(s: StokesMat) -> dict:
    """Closed-form invariants only, without a characteristic polynomial."""
    if s.r == 3:
        return {"k": markoff_k(s.get(1, 2), s.get(2, 3), s.get(1, 3))}
    if s.r == 4:
        coords = rank4_coords(s)
        return {"e1": rank4_e1(*coords), "e2": rank4_e2(*coords)}
    return {}


def invariants(s: StokesMat) -> InvariantRecord:
    """
    k (r=3) or (e1, e2) (r=4) from the entries, cross-checked against p(λ).
    Other ranks carry p only.
    """
    p = coxeter_charpoly(s)
    cf = closed_form(s)
    if s.r == 3:
        expected = r3_poly(cf["k"])
    elif s.r == 4:
        expected = r4_poly(cf["e1"], cf["e2"])
    else:
        expected = p
    if expected != p:
        raise InternalInvariantError(f"closed form {expected} disagrees with charpoly {p}")
    return InvariantRecord(s.r, p, k=cf.get("k"), e1=cf.get("e1"), e2=cf.get("e2"), alt_p=alternate_charpoly(s))


def gram_from_sphere(vs: Sequence[SphereVec]) -> StokesMat:
    """s_ij = 2<v_i, v_j> for i < j."""
    r = len(vs)
    if any(v.form != vs[0].form or v.m != vs[0].m for v in vs):
        raise ValueError("gram_from_sphere needs vectors of one form and dimension")
    return StokesMat.from_entries(r, {(i + 1, j + 1): 2 * pairing(vs[i], vs[j])
                                      for i in range(r) for j in range(i + 1, r)})


def symmetrized(s: StokesMat) -> Mat:
    M = s.to_mat()
    return M + M.T


def rank_filtration_level(s: StokesMat) -> int:
    """rank(s + s^T): the least m with s in V(r, m)."""
    return rank_exact(symmetrized(s))


def reflection_matrix(B: Mat, i: int) -> Mat:
    """-I with row i (0-based) replaced by row i of B, diagonal entry B_ii - 1."""
    n = B.rows
    rows = [[-1 if a == b else 0 for b in range(n)] for a in range(n)]
    rows[i] = [B[i, b] - (1 if b == i else 0) for b in range(n)]
    return Mat.from_rows(rows)


def coxeter_identity_check(s: StokesMat) -> dict:
    """s · R_1 ··· R_r = (-1)^(r+1) s^T, on the locus where s + s^T is invertible."""
    B = symmetrized(s)
    if det(B) == 0:
        raise DegenerateFormError(f"s + s^T is singular for {s.to_rows()}")
    M = s.to_mat()
    prod = Mat.identity(s.r)
    for i in range(s.r):
        prod = prod @ reflection_matrix(B, i)
    lhs = M @ prod
    rhs = M.T.scale((-1) ** (s.r + 1))
    return {"r": s.r, "lhs": lhs, "rhs": rhs, "ok": lhs == rhs}
