import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from sympy import Poly

from ...errors import MalformedInputError
from ..exact import LAMBDA, Scalar, unipoly
from ..clifford import Mat2, product_of
from ..quandle import CoreQuandle, braid_step
from ..stokes import StokesMat, markoff_k, rank4_coords, rank4_e1, rank4_e2


logger = logging.getLogger(__name__)

PHI = "phi"
PSI = "psi"

GTuple = Tuple[Mat2, ...]     # r elements, a point of B(r, G)
RepTuple = Tuple[Mat2, ...]   # r - 1 elements, a point of C(r, G)

CORE_SL2 = CoreQuandle("core(SL2)")


def parse_tuple(data, p: Optional[int] = None) -> Tuple[Mat2, ...]:
    """JSON list of 2x2 integer matrices; every one must have determinant 1."""
    if isinstance(data, str):
        raise MalformedInputError("expected a list of 2x2 matrices, got a string")
    try:
        rows = [[list(row) for row in m] for m in data]
        mats = tuple(Mat2.from_rows(m, p) for m in rows)
    except (TypeError, ValueError) as e:
        raise MalformedInputError(f"expected a list of 2x2 matrices: {e}") from e
    for n, m in enumerate(rows):
        if not all(isinstance(x, int) and not isinstance(x, bool) for row in m for x in row):
            raise MalformedInputError(f"matrix {n + 1} has non-integer entries")
    for n, m in enumerate(mats):
        if m.det() != 1:
            raise MalformedInputError(f"matrix {n + 1} has determinant {m.det()}, expected 1")
    return mats


def transport(direction: str, point: Sequence[Mat2]) -> Tuple[Mat2, ...]:
    """
    Φ(a_1..a_r) = (a_1 a_2^-1, ..., a_{r-1} a_r^-1);
    Ψ(b_1..b_{r-1}) = (b_1···b_{r-1}, b_2···b_{r-1}, ..., b_{r-1}, 1).
    """
    point = tuple(point)
    if direction == PHI:
        return tuple(point[n] @ point[n + 1].inverse() for n in range(len(point) - 1))
    if direction == PSI:
        p = point[0].p if point else None
        out = [Mat2.identity(p)]
        for b in reversed(point):
            out.append(b @ out[-1])
        return tuple(reversed(out))
    raise ValueError(f"unknown direction {direction!r}")


def b_braid_act(i: int, sign: int, a: GTuple) -> GTuple:
    """a_i -> a_i a_{i+1}^-1 a_i, a_{i+1} -> a_i: the core-quandle move on G^r."""
    return braid_step(CORE_SL2, i, sign, tuple(a))


def c_braid_act(i: int, sign: int, b: RepTuple) -> RepTuple:
    """
    Braid action induced on (b_1..b_{r-1}) by Φ: σ_i keeps b_i and sends
    b_{i-1} -> b_{i-1} b_i^-1, b_{i+1} -> b_i b_{i+1} where those exist.
    """
    b = list(b)
    r = len(b) + 1
    if not 1 <= i <= r - 1:
        raise IndexError(f"generator index {i} out of range for r={r}")
    n = i - 1
    bi = b[n]
    if sign > 0:
        if n >= 1:
            b[n - 1] = b[n - 1] @ bi.inverse()
        if n + 1 <= r - 2:
            b[n + 1] = bi @ b[n + 1]
    else:
        if n >= 1:
            b[n - 1] = b[n - 1] @ bi
        if n + 1 <= r - 2:
            b[n + 1] = bi.inverse() @ b[n + 1]
    return tuple(b)


def rep_to_stokes(b: RepTuple) -> StokesMat:
    """s_ij = tr(b_i ··· b_{j-1})."""
    r = len(b) + 1
    entries = {}
    for i in range(1, r):
        acc = b[i - 1]
        entries[(i, i + 1)] = acc.trace()
        for j in range(i + 2, r + 1):
            acc = acc @ b[j - 2]
            entries[(i, j)] = acc.trace()
    return StokesMat.from_entries(r, entries)


@dataclass(frozen=True)
class BoundaryTraces:
    """
    Boundary data for r = 2g + n: one trace k for odd r, a pair (k1, k2) for even r.
    Even-r data may also be given only through (e1, e2) = (k1 + k2, k1 k2).
    """
    parity: int
    traces: Tuple[Scalar, ...] = ()
    symmetric: Optional[Tuple[Scalar, Scalar]] = None

    @classmethod
    def odd(cls, k) -> "BoundaryTraces":
        return cls(1, (k,))

    @classmethod
    def even(cls, k1, k2) -> "BoundaryTraces":
        return cls(0, (k1, k2))

    @classmethod
    def from_symmetric(cls, e1, e2) -> "BoundaryTraces":
        return cls(0, (), (e1, e2))

    @property
    def k(self) -> Scalar:
        assert self.parity == 1, "k is defined for odd r"
        return self.traces[0]

    def e1e2(self) -> Tuple[Scalar, Scalar]:
        assert self.parity == 0, "(e1, e2) is defined for even r"
        if self.traces:
            k1, k2 = self.traces
            return k1 + k2, k1 * k2
        return self.symmetric

    def to_json(self):
        out = {"parity": self.parity, "traces": list(self.traces)}
        if self.parity == 0:
            out["e1"], out["e2"] = self.e1e2()
        return out


def boundary_words(b: RepTuple) -> Tuple[Mat2, ...]:
    """
    r even: (b1 b3 ··· b_{r-1}, (b1···b_{r-1})^-1 (b2 b4 ··· b_{r-2}));
    r odd: (b1 b3 ··· b_{r-2}) (b1···b_{r-1})^-1 (b2 b4 ··· b_{r-1}).
    """
    r = len(b) + 1
    p = b[0].p if b else None
    full_inv = product_of(b, p).inverse()
    odd = product_of([b[n - 1] for n in range(1, r, 2)], p)
    even = product_of([b[n - 1] for n in range(2, r, 2)], p)
    if r % 2 == 0:
        return odd, full_inv @ even
    return (odd @ full_inv @ even,)


def boundary_monodromy(b: RepTuple) -> BoundaryTraces:
    r = len(b) + 1
    words = boundary_words(b)
    if r % 2 == 0:
        return BoundaryTraces.even(words[0].trace(), words[1].trace())
    return BoundaryTraces.odd(words[0].trace())


def surface_membership(s, traces: BoundaryTraces) -> bool:
    """
    r=3: x²+y²+z²-xyz-2 = k with (x, y, z) = (s12, s23, s13);
    r=4: ac+bd-ef = k1+k2 and the quartic minus 4 = k1 k2.
    """
    if isinstance(s, StokesMat):
        r = s.r
        coords = (s.get(1, 2), s.get(2, 3), s.get(1, 3)) if r == 3 else rank4_coords(s) if r == 4 else None
    else:
        coords = tuple(s)
        r = {3: 3, 6: 4}.get(len(coords))
    if r == 3:
        return markoff_k(*coords) == traces.k
    if r == 4:
        e1, e2 = traces.e1e2()
        return rank4_e1(*coords) == e1 and rank4_e2(*coords) == e2
    raise ValueError(f"surface equations are implemented for r in (3, 4), got {r}")


def goldman_coordinates(s: StokesMat) -> dict:
    """Trace coordinates of the two-holed torus: u=a, x=b, y=f, v=ab-e, w=d, z=c."""
    assert s.r == 4, "Goldman coordinates are for r=4"
    a, b, c, d, e, f = rank4_coords(s)
    return {"u": a, "v": a * b - e, "w": d, "x": b, "y": f, "z": c}


def goldman_invariants(s: StokesMat) -> Tuple[Scalar, Scalar]:
    g = goldman_coordinates(s)
    u, v, w, x, y, z = g["u"], g["v"], g["w"], g["x"], g["y"], g["z"]
    total = y * v + x * w + z * u - u * x * y
    prod = (x * x + y * y + u * u + v * v + w * w + z * z
            - x * y * z - y * u * w - u * x * v + v * w * z - 4)
    return total, prod


def goldman_membership(s: StokesMat, traces: BoundaryTraces) -> bool:
    return goldman_invariants(s) == tuple(traces.e1e2())


def predicted_charpoly(traces: BoundaryTraces, r: int) -> Poly:
    """
    Coxeter polynomial forced on the trace image:
    r odd (λ²-kλ+1)(λ+1)(λ-1)^(r-3), r even quartic(e1, e2)·(λ-1)^(r-4).
    """
    if r % 2:
        k = traces.k
        return Poly((LAMBDA ** 2 - k * LAMBDA + 1) * (LAMBDA + 1) * (LAMBDA - 1) ** (r - 3), LAMBDA)
    e1, e2 = traces.e1e2()
    quartic = unipoly([1, -e2, e1 * e1 - 2 * e2 - 2, -e2, 1])
    return quartic * Poly((LAMBDA - 1) ** (r - 4), LAMBDA)


def trace_identity_check(samples: Iterable[Tuple[Mat2, Mat2]]) -> dict:
    """tr(A²B) = tr(AB) tr(A) - tr(B) on SL2 pairs."""
    failures = []
    checked = 0
    for A, B in samples:
        checked += 1
        if (A @ A @ B).trace() != (A @ B).trace() * A.trace() - B.trace():
            failures.append((A, B))
    return {"checked": checked, "failures": failures, "ok": not failures}
