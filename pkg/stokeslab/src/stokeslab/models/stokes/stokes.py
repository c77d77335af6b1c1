import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ...errors import MalformedInputError
from ...utils import parse_scalar, rand_int
from ..exact import Mat, Scalar, coordinate_pairs, normalize
from ..quandle import BraidWord


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StokesMat:
    """
    Upper unitriangular r x r matrix, stored as its strictly-upper entries
    s_ij (i < j) in lexicographic pair order.
    """
    r: int
    upper: Tuple[Scalar, ...]

    def __post_init__(self):
        assert self.r >= 2, "Stokes matrices need r >= 2"
        assert len(self.upper) == self.r * (self.r - 1) // 2, "wrong number of upper entries"

    @classmethod
    def identity(cls, r: int) -> "StokesMat":
        return cls(r, (0,) * (r * (r - 1) // 2))

    @classmethod
    def from_entries(cls, r: int, entries: Dict[Tuple[int, int], Scalar]) -> "StokesMat":
        """entries keyed by 1-based (i, j); missing pairs are 0."""
        return cls(r, tuple(normalize(entries.get(ij, 0)) for ij in coordinate_pairs(r)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "StokesMat":
        try:
            rows = [[parse_scalar(x) for x in row] for row in rows]
        except (TypeError, ValueError) as e:
            raise MalformedInputError(f"matrix entries must be exact numbers: {e}") from e
        r = len(rows)
        if r < 2 or any(len(row) != r for row in rows):
            raise MalformedInputError(f"expected a square matrix with r >= 2, got {len(rows)} rows")
        for i in range(r):
            if rows[i][i] != 1 or any(rows[i][j] != 0 for j in range(i)):
                raise MalformedInputError(f"row {i + 1} is not unitriangular: {rows[i]}")
        return cls(r, tuple(normalize(rows[i - 1][j - 1]) for i, j in coordinate_pairs(r)))

    @classmethod
    def from_mat(cls, M: Mat) -> "StokesMat":
        return cls.from_rows(M.to_rows())

    def get(self, i: int, j: int) -> Scalar:
        """Entry (i, j), 1-based."""
        if i == j:
            return 1
        if i > j:
            return 0
        r = self.r
        # offset of row i in the packed upper triangle
        return self.upper[(i - 1) * r - (i - 1) * i // 2 + (j - i - 1)]

    def to_rows(self) -> List[List[Scalar]]:
        return [[self.get(i, j) for j in range(1, self.r + 1)] for i in range(1, self.r + 1)]

    def to_mat(self) -> Mat:
        return Mat.from_rows(self.to_rows())

    def key(self) -> Tuple[Scalar, ...]:
        return self.upper

    def height(self) -> Scalar:
        return max((abs(x) for x in self.upper), default=0)

    def norm(self) -> Scalar:
        return sum(x * x for x in self.upper)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.upper)

    def to_json(self):
        return self.to_rows()


def _upper_from_rows(rows, r: int) -> Tuple[Scalar, ...]:
    return tuple(normalize(rows[i - 1][j - 1]) for i, j in coordinate_pairs(r))


def stokes_braid_act(i: int, sign: int, s: StokesMat) -> StokesMat:
    """
    σ_i: s -> A s A^T with A the identity except the block [[x, -1], [1, 0]] at
    rows/cols i, i+1, x = s_{i,i+1}. σ_i^-1 conjugates by A^-1 = [[0, 1], [-1, x]].
    """
    r = s.r
    if not 1 <= i <= r - 1:
        raise IndexError(f"generator index {i} out of range for r={r}")
    p, q = i - 1, i
    x = s.get(i, i + 1)
    M = s.to_rows()
    rp, rq = M[p], M[q]
    if sign > 0:
        M[p] = [x * a - b for a, b in zip(rp, rq)]
        M[q] = list(rp)
        for row in M:
            cp, cq = row[p], row[q]
            row[p], row[q] = x * cp - cq, cp
    else:
        M[p] = list(rq)
        M[q] = [x * b - a for a, b in zip(rp, rq)]
        for row in M:
            cp, cq = row[p], row[q]
            row[p], row[q] = cq, x * cq - cp
    out = StokesMat(r, _upper_from_rows(M, r))
    assert all(M[k][k] == 1 for k in range(r)) and M[q][p] == 0, "braid move left the unitriangular locus"
    return out


def act_word(word: BraidWord, s: StokesMat) -> StokesMat:
    word.check(s.r)
    for i, sign in word:
        s = sign_flip(i, s) if sign == 0 else stokes_braid_act(i, sign, s)
    return s


def sign_flip(i: int, s: StokesMat) -> StokesMat:
    """Negate basis vector i: row and column i change sign, the diagonal stays 1."""
    if not 1 <= i <= s.r:
        raise IndexError(f"basis index {i} out of range for r={s.r}")
    return StokesMat(s.r, tuple(-x if i in (a, b) else x for x, (a, b) in zip(s.upper, coordinate_pairs(s.r))))


def random_stokes(rng, r: int, height: int = 3) -> StokesMat:
    return StokesMat(r, tuple(rand_int(rng, -height, height) for _ in range(r * (r - 1) // 2)))


def random_rational_stokes(rng, r: int, height: int = 3) -> StokesMat:
    return StokesMat(r, tuple(normalize(Fraction(rand_int(rng, -height, height), rand_int(rng, 1, height)))
                              for _ in range(r * (r - 1) // 2)))
