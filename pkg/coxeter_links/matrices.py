"""
Immutable dense integer and rational square matrices.

Arithmetic is delegated to sympy's ``DomainMatrix`` over ``ZZ`` so all
intermediate values stay exact and arbitrary precision.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from .errors import MalformedMatrixError


def _square_rows(rows: Sequence[Sequence], kind: str) -> int:
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise MalformedMatrixError(f"{kind} must be square, got a row of length {len(row)} in a {n}-row matrix")
    return n


@dataclass(frozen=True)
class IntMatrix:
    """Dense square matrix of Python integers, indexed ``m[i, j]``."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        _square_rows(self.rows, "IntMatrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix) -> "IntMatrix":
        return cls.from_rows([[int(v) for v in row] for row in dm.to_list()])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def tolist(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(v) for v in row] for row in self.rows], (self.n, self.n), ZZ)

    def to_rational(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)) if self.rows else ())

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def _check_shape(self, other: "IntMatrix") -> None:
        if other.n != self.n:
            raise MalformedMatrixError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_shape(other)
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_shape(other)
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_shape(other)
        if self.n == 0:
            return self
        return IntMatrix.from_domain_matrix(self.to_domain_matrix().matmul(other.to_domain_matrix()))

    def determinant(self) -> int:
        if self.n == 0:
            return 1
        return int(self.to_domain_matrix().det())

    def is_symmetric(self) -> bool:
        return self.rows == self.transpose().rows

    def is_upper_unitriangular(self) -> bool:
        return all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(self.n)
            for j in range(i + 1)
        )

    def __str__(self) -> str:
        width = max((len(str(v)) for row in self.rows for v in row), default=1)
        return "\n".join("[" + " ".join(str(v).rjust(width) for v in row) + "]" for row in self.rows)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense square matrix of ``Fraction`` entries (always in lowest terms)."""

    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        _square_rows(self.rows, "RationalMatrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]
