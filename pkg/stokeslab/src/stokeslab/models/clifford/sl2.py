from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional

from ..exact import Mat, Scalar, normalize


@dataclass(frozen=True)
class Mat2:
    """
    2x2 matrix [[a, b], [c, d]] over Z, Q, or F_p (when p is set).
    """
    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    p: Optional[int] = None

    def __post_init__(self):
        for f in "abcd":
            x = getattr(self, f)
            if self.p is not None:
                assert not isinstance(x, Fraction) or x.denominator == 1, "F_p entries must be integers"
                x = int(x) % self.p
            else:
                x = normalize(x)
            object.__setattr__(self, f, x)

    @classmethod
    def identity(cls, p: Optional[int] = None) -> "Mat2":
        return cls(1, 0, 0, 1, p)

    @classmethod
    def from_rows(cls, rows, p: Optional[int] = None) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d, p)

    @classmethod
    def from_coords(cls, coords, p: Optional[int] = None) -> "Mat2":
        a, b, c, d = coords
        return cls(a, b, c, d, p)

    def to_rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def to_json(self):
        return self.to_rows()

    def coords(self):
        return (self.a, self.b, self.c, self.d)

    def key(self):
        return self.coords()

    def to_mat(self) -> Mat:
        return Mat.from_rows(self.to_rows())

    def _reduce(self, x):
        return x % self.p if self.p is not None else normalize(x)

    def det(self) -> Scalar:
        return self._reduce(self.a * self.d - self.b * self.c)

    def trace(self) -> Scalar:
        return self._reduce(self.a + self.d)

    def adj(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a, self.p)

    def inverse(self) -> "Mat2":
        det = self.det()
        if det == 1:
            return self.adj()
        if det == 0:
            raise ZeroDivisionError("singular 2x2 matrix")
        if self.p is not None:
            return self.adj().scale(pow(int(det), -1, self.p))
        return self.adj().scale(Fraction(1) / det)

    def scale(self, k) -> "Mat2":
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d, self.p)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.p,
        )

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d, self.p)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d, self.p)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d, self.p)

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d, self.p)

    def is_unimodular(self) -> bool:
        return self.det() == 1


UPPER = Mat2(1, 1, 0, 1)
LOWER = Mat2(1, 0, 1, 1)


def product_of(mats, p: Optional[int] = None) -> Mat2:
    acc = Mat2.identity(p)
    for m in mats:
        acc = acc @ m
    return acc


def random_sl2(rng, length: int = 6, p: Optional[int] = None) -> Mat2:
    """Random word in [[1,1],[0,1]], [[1,0],[1,1]] and their inverses."""
    gens = [UPPER, LOWER, UPPER.adj(), LOWER.adj()]
    acc = Mat2.identity(p)
    for _ in range(length):
        g = gens[int(rng.integers(0, 4))]
        acc = acc @ Mat2(g.a, g.b, g.c, g.d, p)
    return acc


def enumerate_sl2(p: int) -> List[Mat2]:
    return [Mat2(a, b, c, d, p) for a, b, c, d in product(range(p), repeat=4) if (a * d - b * c) % p == 1]
