from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from ..exceptions import DimensionMismatchError, LinearlyDependentError, NotClosedError, NotTracelessError
from .matrices import ConstMatrix, commutator, trace
from .scalars import GaussianRational, ZERO

StructureConstants = tuple[tuple[tuple[GaussianRational, ...], ...], ...]


def _flatten(matrix: ConstMatrix) -> list[GaussianRational]:
    return [value for row in matrix.rows for value in row]


def structure_constants(basis: Sequence[ConstMatrix]) -> StructureConstants:
    """
    Solve [t_i, t_j] = sum_k C_ij^k t_k exactly.

    Row-reduces [B | all brackets] where B holds the flattened basis as
    columns: a missing pivot among the first d columns means dependence,
    a pivot among the bracket columns means the span is not closed.
    """
    d = len(basis)
    if d == 0:
        return ()
    n = basis[0].n
    if any(tau.n != n for tau in basis):
        raise DimensionMismatchError("Basis elements must share a dimension")
    if any(trace(tau) for tau in basis):
        raise NotTracelessError("Basis elements must be traceless")

    columns = [_flatten(tau) for tau in basis]
    for i in range(d):
        for j in range(d):
            columns.append(_flatten(commutator(basis[i], basis[j])))
    rows = [[column[r] for column in columns] for r in range(n * n)]
    reduced, pivots = DomainMatrix(rows, (n * n, len(columns)), QQ_I).rref()

    if tuple(pivots[:d]) != tuple(range(d)):
        raise LinearlyDependentError("Basis is linearly dependent")
    if len(pivots) > d:
        raise NotClosedError("Basis is not closed under the bracket")

    entries = reduced.to_list()
    return tuple(
        tuple(
            tuple(entries[k][d + i * d + j] for k in range(d))
            for j in range(d)
        )
        for i in range(d)
    )


@dataclass(frozen=True)
class LieBasis:
    """Ordered traceless basis of sl(n) with its structure constants."""

    n: int
    taus: tuple[ConstMatrix, ...]
    structure: StructureConstants = field(compare=False)

    @classmethod
    def from_matrices(cls, taus: Sequence[ConstMatrix]) -> LieBasis:
        taus = tuple(taus)
        if not taus:
            raise DimensionMismatchError("Empty basis")
        n = taus[0].n
        if len(taus) != n * n - 1:
            raise DimensionMismatchError(f"sl({n}) needs {n * n - 1} basis elements, got {len(taus)}")
        return cls(n, taus, structure_constants(taus))

    @classmethod
    def sl(cls, n: int = 2) -> LieBasis:
        """
        E_ij (i != j, row-major) followed by H_k = E_kk - E_{k+1,k+1}.
        For n = 2: tau1 = E_12, tau2 = E_21, tau3 = diag(1, -1).
        """
        if n < 2:
            raise DimensionMismatchError("sl(n) needs n >= 2")
        taus = [ConstMatrix.unit(n, i, j) for i in range(n) for j in range(n) if i != j]
        taus += [ConstMatrix.unit(n, k, k) - ConstMatrix.unit(n, k + 1, k + 1) for k in range(n - 1)]
        return cls.from_matrices(taus)

    @property
    def dimension(self) -> int:
        return len(self.taus)

    def tau(self, k: int) -> ConstMatrix:
        """1-based access, matching the tau1..tauD names."""
        return self.taus[k - 1]

    def constant(self, i: int, j: int, k: int) -> GaussianRational:
        """C_ij^k with 1-based indices."""
        return self.structure[i - 1][j - 1][k - 1]

    @cached_property
    def _gl_inverse(self) -> list[list[GaussianRational]]:
        columns = [_flatten(ConstMatrix.identity(self.n))] + [_flatten(tau) for tau in self.taus]
        size = self.n * self.n
        rows = [[column[r] for column in columns] for r in range(size)]
        return DomainMatrix(rows, (size, size), QQ_I).inv().to_list()

    def expand(self, matrix: ConstMatrix) -> tuple[GaussianRational, tuple[GaussianRational, ...]]:
        """Coordinates of a matrix over {I, tau_1..tau_d}: (identity part, tau parts)."""
        flat = _flatten(matrix)
        inverse = self._gl_inverse
        coords = []
        for row in inverse:
            total = ZERO
            for a, b in zip(row, flat):
                if a and b:
                    total = total + a * b
            coords.append(total)
        return coords[0], tuple(coords[1:])

    def combine(self, identity_part: GaussianRational, tau_parts: Sequence[GaussianRational]) -> ConstMatrix:
        result = ConstMatrix.identity(self.n).scale(identity_part)
        for coefficient, tau in zip(tau_parts, self.taus):
            if coefficient:
                result = result + tau.scale(coefficient)
        return result

    def default_m(self) -> ConstMatrix:
        """Generic traceless value for the constant symbol M: sum_k k*tau_k."""
        return self.combine(ZERO, [QQ_I(k, 0) for k in range(1, self.dimension + 1)])
