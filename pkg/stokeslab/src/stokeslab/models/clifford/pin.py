from dataclasses import dataclass
from fractions import Fraction
from operator import matmul, mul
from typing import Optional, Sequence, Tuple

from ..exact import Scalar, normalize
from ..quandle import GradedPair
from .sl2 import Mat2
from .sphere import DET, SPLIT, SphereVec, sphere_reflect


class PinElem4(GradedPair):
    """Element of M4 = Mat2² ⊕ Mat2²ι."""

    def __mul__(self, other: "PinElem4") -> "PinElem4":
        return self.times(other, matmul)

    def inverse(self) -> "PinElem4":
        if self.parity:
            return PinElem4(self.right.inverse(), self.left.inverse(), 1)
        return PinElem4(self.left.inverse(), self.right.inverse(), 0)


class PinElem2(GradedPair):
    """Element of M2 = Q² ⊕ Q²ι."""

    def __mul__(self, other: "PinElem2") -> "PinElem2":
        return self.times(other, lambda a, b: normalize(Fraction(a) * b))

    def inverse(self) -> "PinElem2":
        if self.parity:
            return PinElem2(normalize(1 / Fraction(self.right)), normalize(1 / Fraction(self.left)), 1)
        return PinElem2(normalize(1 / Fraction(self.left)), normalize(1 / Fraction(self.right)), 0)


def pin4_mul(a: PinElem4, b: PinElem4) -> PinElem4:
    return a * b


def j4(x) -> PinElem4:
    """j(x) = (x, adj x)ι; j(x)² = det(x)."""
    g = x.to_mat2() if isinstance(x, SphereVec) else x
    return PinElem4(g, g.adj(), 1)


def j2(v: SphereVec) -> PinElem2:
    x, y = v.coords
    return PinElem2(x, y, 1)


def _embed(v: SphereVec):
    if v.form == DET:
        return j4(v)
    if v.form == SPLIT:
        return j2(v)
    raise ValueError(f"no matrix model for form {v.form!r}")


def verify_reflection_conjugation(u: SphereVec, v: SphereVec) -> dict:
    """s_u(v) by the bilinear formula against j(u) j(v) j(u)^-1 in M2 or M4."""
    lhs = _embed(sphere_reflect(u, v))
    ju = _embed(u)
    rhs = ju * _embed(v) * ju.inverse()
    return {"form": u.form, "reflection": lhs, "conjugation": rhs, "ok": lhs == rhs}


@dataclass(frozen=True)
class CoxeterClass:
    """
    Trace-level class in W(SL2)² ⊔ W(SL2): two traces for parity 0, one for parity 1.
    """
    parity: int
    traces: Tuple[Scalar, ...]

    def __post_init__(self):
        assert len(self.traces) == (1 if self.parity else 2), "parity 1 carries one trace, parity 0 two"

    def to_json(self):
        return {"parity": self.parity, "traces": list(self.traces)}


def coxeter_class(elem: GradedPair) -> CoxeterClass:
    if elem.parity:
        return CoxeterClass(1, ((elem.left @ elem.right).trace(),))
    return CoxeterClass(0, (elem.left.trace(), elem.right.trace()))


def sphere_coxeter_m4(vs: Sequence[SphereVec]) -> PinElem4:
    """j(v_1) ··· j(v_r) in M4."""
    acc: Optional[PinElem4] = None
    for v in vs:
        acc = j4(v) if acc is None else acc * j4(v)
    return acc


@dataclass(frozen=True)
class Mu2Class:
    """Class in μ2 ⊔ {*}: a sign for even r, the point * for odd r."""
    sign: Optional[int]

    def to_json(self):
        return "*" if self.sign is None else self.sign


def mu2_coxeter(signs: Sequence[int]) -> Mu2Class:
    """(u_1 ι) ··· (u_r ι) in M1; ι is central and squares to 1."""
    prod = 1
    for s in signs:
        assert s in (1, -1), "S(q1) = {1, -1}"
        prod *= s
    return Mu2Class(prod if len(signs) % 2 == 0 else None)


def mu2_embed(c: Mu2Class):
    """μ2 ⊔ {*} -> μ2² ⊔ μ2: x -> (x, x^-1), * -> 1."""
    return (c.sign, c.sign) if c.sign is not None else 1
