import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix


logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def normalize(x) -> Scalar:
    """Collapse integral Fractions to int so that keys and hashes agree."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    return int(x)


def from_domain(c) -> Scalar:
    if hasattr(c, "denominator") and hasattr(c, "numerator"):
        return normalize(Fraction(int(c.numerator), int(c.denominator)))
    return int(c)


@dataclass(frozen=True)
class Mat:
    """
    Dense row-major matrix over int / Fraction.
    """
    rows: int
    cols: int
    entries: Tuple[Scalar, ...]

    def __post_init__(self):
        assert len(self.entries) == self.rows * self.cols, \
            f"expected {self.rows * self.cols} entries, got {len(self.entries)}"

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if n else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, tuple(normalize(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, (0,) * (rows * cols))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    @property
    def T(self) -> "Mat":
        return self.transpose()

    def _check_shape(self, other: "Mat"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_shape(other)
        return Mat(self.rows, self.cols, tuple(normalize(a + b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_shape(other)
        return Mat(self.rows, self.cols, tuple(normalize(a - b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Mat":
        return Mat(self.rows, self.cols, tuple(normalize(c * a) for a in self.entries))

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(normalize(sum(ri[k] * other.entries[k * other.cols + j] for k in range(self.cols))))
        return Mat(self.rows, other.cols, tuple(out))

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.entries)

    def to_domain_matrix(self) -> DomainMatrix:
        if self.is_integral():
            return DomainMatrix.from_list(self.to_rows(), ZZ)
        rows = [[(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in self.to_rows()]
        return DomainMatrix.from_list(rows, QQ)

    def to_json(self):
        return self.to_rows()


def det(M: Mat) -> Scalar:
    if not M.is_square:
        raise ValueError("determinant of a non-square matrix")
    if M.rows == 0:
        return 1
    return from_domain(M.to_domain_matrix().det())


def cofactor_det(M: Mat) -> Scalar:
    """Laplace expansion along the first row; independent of the DomainMatrix path."""
    if not M.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    if n == 1:
        return M[0, 0]
    total = 0
    for j in range(n):
        if M[0, j] == 0:
            continue
        minor = Mat(n - 1, n - 1, tuple(M[i, k] for i in range(1, n) for k in range(n) if k != j))
        total += (-1) ** j * M[0, j] * cofactor_det(minor)
    return normalize(total)


def rank_exact(M: Mat) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return M.to_domain_matrix().convert_to(QQ).rank()


def unitriangular_inverse(M: Mat) -> Mat:
    """
    Inverse of an upper unitriangular matrix by back-substitution.
    Integer input gives integer output.
    """
    n = M.rows
    assert M.is_square, "unitriangular_inverse needs a square matrix"
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            inv[i][j] = normalize(-sum(M[i, k] * inv[k][j] for k in range(i + 1, j + 1)))
    return Mat.from_rows(inv)
