from sympy import Poly

from ..exact import LAMBDA, Mat, charpoly, unipoly
from ..clifford import Mat2

ADJ = "adj"      # u -> a·adj(u)·b
PLAIN = "plain"  # u -> a·u·b
VARIANTS = (ADJ, PLAIN)

BASIS = [Mat2(1, 0, 0, 0), Mat2(0, 1, 0, 0), Mat2(0, 0, 1, 0), Mat2(0, 0, 0, 1)]


def operator_matrix(a: Mat2, b: Mat2, variant: str) -> Mat:
    """4x4 matrix of the map on Mat2 in the basis E11, E12, E21, E22 (images as columns)."""
    if variant == ADJ:
        images = [a @ e.adj() @ b for e in BASIS]
    elif variant == PLAIN:
        images = [a @ e @ b for e in BASIS]
    else:
        raise ValueError(f"unknown operator variant {variant!r}")
    return Mat.from_rows([[img.coords()[row] for img in images] for row in range(4)])


def closed_form(a: Mat2, b: Mat2, variant: str) -> Poly:
    if variant == ADJ:
        k = -(a @ b.inverse()).trace()
        return Poly((LAMBDA ** 2 - k * LAMBDA + 1) * (LAMBDA + 1) * (LAMBDA - 1), LAMBDA)
    k1, k2 = a.trace(), b.trace()
    return unipoly([1, -k1 * k2, k1 * k1 + k2 * k2 - 2, -k1 * k2, 1])


def operator_charpoly(a: Mat2, b: Mat2, variant: str = PLAIN) -> dict:
    if not (a.is_unimodular() and b.is_unimodular()):
        raise ValueError("operator_charpoly needs det a = det b = 1")
    M = operator_matrix(a, b, variant)
    p = charpoly(M)
    expected = closed_form(a, b, variant)
    return {"variant": variant, "matrix": M, "charpoly": p, "closed_form": expected, "ok": p == expected}
