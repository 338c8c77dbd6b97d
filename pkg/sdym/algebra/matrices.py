from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..exceptions import DimensionMismatchError, SingularMatrixError
from .scalars import GaussianRational, ZERO, ONE, as_gaussian


@dataclass(frozen=True)
class ConstMatrix:
    """Immutable n x n matrix of Gaussian rationals."""

    n: int
    rows: tuple[tuple[GaussianRational, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> ConstMatrix:
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionMismatchError("Matrix must be square")
        return cls(n, tuple(tuple(as_gaussian(value) for value in row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> ConstMatrix:
        return cls(n, tuple(tuple(ZERO for _ in range(n)) for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> ConstMatrix:
        return cls(n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, n: int, row: int, col: int) -> ConstMatrix:
        return cls(n, tuple(tuple(ONE if (i, j) == (row, col) else ZERO for j in range(n)) for i in range(n)))

    def _check(self, other: ConstMatrix) -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"Dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: ConstMatrix) -> ConstMatrix:
        self._check(other)
        return ConstMatrix(self.n, tuple(
            tuple(a + b for a, b in zip(row_a, row_b)) for row_a, row_b in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: ConstMatrix) -> ConstMatrix:
        self._check(other)
        return ConstMatrix(self.n, tuple(
            tuple(a - b for a, b in zip(row_a, row_b)) for row_a, row_b in zip(self.rows, other.rows)
        ))

    def __neg__(self) -> ConstMatrix:
        return ConstMatrix(self.n, tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, factor: GaussianRational) -> ConstMatrix:
        factor = as_gaussian(factor)
        return ConstMatrix(self.n, tuple(tuple(factor * a for a in row) for row in self.rows))

    def __mul__(self, other: ConstMatrix) -> ConstMatrix:
        if not isinstance(other, ConstMatrix):
            return self.scale(other)
        self._check(other)
        columns = list(zip(*other.rows))
        rows = []
        for row in self.rows:
            out = []
            for column in columns:
                total = ZERO
                for a, b in zip(row, column):
                    if a and b:
                        total = total + a * b
                out.append(total)
            rows.append(tuple(out))
        return ConstMatrix(self.n, tuple(rows))

    def is_zero(self) -> bool:
        return not any(value for row in self.rows for value in row)

    def entries(self) -> Iterable[GaussianRational]:
        for row in self.rows:
            yield from row

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.rows], (self.n, self.n), QQ_I)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows) + "]"


def commutator(a: ConstMatrix, b: ConstMatrix) -> ConstMatrix:
    """ab - ba."""
    return a * b - b * a


def trace(a: ConstMatrix) -> GaussianRational:
    total = ZERO
    for i in range(a.n):
        total = total + a.rows[i][i]
    return total


def const_inverse(a: ConstMatrix) -> ConstMatrix:
    matrix = a.to_domain_matrix()
    if not matrix.det():
        raise SingularMatrixError("Matrix is singular")
    try:
        inverse = matrix.inv()
    except (DMNonInvertibleMatrixError, ZeroDivisionError) as e:
        raise SingularMatrixError(f"Matrix is singular: {str(e)}")
    return ConstMatrix.of(inverse.to_list())
