import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Tuple

from ...utils import make_rng, rand_fraction, rand_int
from ..exact import Scalar, normalize
from ..quandle import QuandleModel
from .sl2 import Mat2, random_sl2


logger = logging.getLogger(__name__)

STANDARD = "standard"   # sum of squares, any m
SPLIT = "split"         # q2(x, y) = xy
DET = "det"             # q4 = det on Mat2, coords (x11, x12, x21, x22)
FORMS = (STANDARD, SPLIT, DET)


def bilinear(form: str, u: Sequence, v: Sequence) -> Scalar:
    """Polarization <u, v> of the quadratic form, so that q(v) = <v, v>."""
    if form == STANDARD:
        return normalize(sum(Fraction(a) * b for a, b in zip(u, v)))
    if form == SPLIT:
        return normalize(Fraction(u[0] * v[1] + u[1] * v[0], 2))
    if form == DET:
        return normalize(Fraction(u[0] * v[3] + u[3] * v[0] - u[1] * v[2] - u[2] * v[1], 2))
    raise ValueError(f"unknown form {form!r}")


@dataclass(frozen=True)
class SphereVec:
    coords: Tuple[Scalar, ...]
    form: str = STANDARD

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(normalize(x) for x in self.coords))
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}")
        if self.form == SPLIT and self.m != 2:
            raise ValueError("split form lives in dimension 2")
        if self.form == DET and self.m != 4:
            raise ValueError("det form lives in dimension 4")
        if bilinear(self.form, self.coords, self.coords) != 1:
            raise ValueError(f"q({self.coords}) != 1")

    @property
    def m(self) -> int:
        return len(self.coords)

    @classmethod
    def from_mat2(cls, g: Mat2) -> "SphereVec":
        return cls(g.coords(), DET)

    def to_mat2(self) -> Mat2:
        assert self.form == DET, "only det-form vectors are 2x2 matrices"
        return Mat2.from_coords(self.coords)

    def key(self):
        return self.coords

    def to_json(self):
        return {"coords": list(self.coords), "form": self.form}


def pairing(u: SphereVec, v: SphereVec) -> Scalar:
    if u.form != v.form or u.m != v.m:
        raise ValueError(f"mismatched sphere vectors ({u.form}, m={u.m}) vs ({v.form}, m={v.m})")
    return bilinear(u.form, u.coords, v.coords)


def sphere_reflect(u: SphereVec, v: SphereVec) -> SphereVec:
    """s_u(v) = 2<u, v> u - v."""
    t = 2 * pairing(u, v)
    return SphereVec(tuple(t * a - b for a, b in zip(u.coords, v.coords)), u.form)


class SphereQuandle(QuandleModel):
    """Reflections s_u on {q = 1}; involutive, so op_inv = op."""

    def __init__(self, form: str = STANDARD):
        self.form = form
        self.name = f"sphere({form})"

    def op(self, u, v):
        return sphere_reflect(u, v)

    def op_inv(self, u, z):
        return sphere_reflect(u, z)

    def key(self, u):
        return u.coords


def stereographic(w: Sequence) -> Tuple[Fraction, ...]:
    """Inverse stereographic projection Q^(m-1) -> S^(m-1) from the north pole."""
    n2 = sum(Fraction(x) ** 2 for x in w)
    return tuple(2 * Fraction(x) / (n2 + 1) for x in w) + ((n2 - 1) / (n2 + 1),)


def rational_sphere_point(m: int, seed: int = 0, form: str = STANDARD, rng=None,
                          t: Optional[Fraction] = None, height: int = 5) -> SphereVec:
    """
    A rational point with q(v) = 1. Standard form: stereographic image of a random
    rational point; split: (t, 1/t); det: a random SL2 word times diag(t, 1/t).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    rng = rng if rng is not None else make_rng(seed)
    if form == STANDARD:
        if m == 1:
            return SphereVec((1 if rand_int(rng, 0, 1) else -1,))
        return SphereVec(stereographic([rand_fraction(rng, height) for _ in range(m - 1)]))
    if t is None:
        t = Fraction(0)
        while t == 0:
            t = rand_fraction(rng, height)
    t = Fraction(t)
    if form == SPLIT:
        return SphereVec((t, 1 / t), SPLIT)
    if form == DET:
        g = random_sl2(rng, rand_int(rng, 0, 8)) @ Mat2(t, 0, 0, 1 / t)
        return SphereVec.from_mat2(g)
    raise ValueError(f"unknown form {form!r}")


def random_orthogonal(rng, m: int, form: str = STANDARD) -> Callable[[SphereVec], SphereVec]:
    """
    A random isometry of the form: signed permutations for the standard form,
    (x, y) -> (tx, y/t) with optional swap for the split form, u -> g u h
    (optionally transposed) with g, h in SL2 for the det form.
    """
    if form == STANDARD:
        perm = [int(i) for i in rng.permutation(m)]
        signs = [1 if rand_int(rng, 0, 1) else -1 for _ in range(m)]
        return lambda v: SphereVec(tuple(signs[k] * v.coords[perm[k]] for k in range(m)), form)
    if form == SPLIT:
        t = Fraction(0)
        while t == 0:
            t = rand_fraction(rng)
        swap = bool(rand_int(rng, 0, 1))

        def split_map(v):
            x, y = (v.coords[1], v.coords[0]) if swap else v.coords
            return SphereVec((t * x, y / t), form)
        return split_map
    if form == DET:
        g, h = random_sl2(rng, 5), random_sl2(rng, 5)
        flip = bool(rand_int(rng, 0, 1))

        def det_map(v):
            x = v.to_mat2()
            x = x.transpose() if flip else x
            return SphereVec.from_mat2(g @ x @ h)
        return det_map
    raise ValueError(f"unknown form {form!r}")
