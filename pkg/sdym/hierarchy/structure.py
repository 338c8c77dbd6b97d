from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from ..algebra.scalars import GaussianRational, ZERO
from ..exceptions import NotClosedError
from ..jetexpr import JetAtom, Monomial, Polynomial, RewriteContext, current_context
from .operators import apply_L

logger = logging.getLogger(__name__)

BASE_SIZE = 5


@dataclass(frozen=True)
class StructureTable:
    """f[i][j][k] (0-based) with [L_i, L_j] = -f_ij^k L_k for i, j, k in 1..5."""

    f: tuple[tuple[tuple[GaussianRational, ...], ...], ...]

    def constant(self, i: int, j: int, k: int) -> GaussianRational:
        """f_ij^k with 1-based indices."""
        return self.f[i - 1][j - 1][k - 1]

    def is_antisymmetric(self) -> bool:
        size = len(self.f)
        return all(
            not (self.f[i][j][k] + self.f[j][i][k])
            for i in range(size) for j in range(size) for k in range(size)
        )

    def satisfies_jacobi(self) -> bool:
        size = len(self.f)
        f = self.f
        for i in range(size):
            for j in range(size):
                for k in range(size):
                    for m in range(size):
                        total = ZERO
                        for l in range(size):
                            total = total + f[i][j][l] * f[l][k][m] + f[j][k][l] * f[l][i][m] + f[k][i][l] * f[l][j][m]
                        if total:
                            return False
        return True


def _generic_operand(context: RewriteContext) -> Polynomial:
    return Polynomial.of_atom(JetAtom.generic("P0"))


def operator_commutator(i: int, j: int, context: Optional[RewriteContext] = None) -> Polynomial:
    """[L_i, L_j] applied to a generic operand."""
    context = context or current_context()
    operand = _generic_operand(context)
    return apply_L(i, apply_L(j, operand, context), context) - apply_L(j, apply_L(i, operand, context), context)


def _expand(target: Polynomial, span: list[Polynomial]) -> Optional[list[GaussianRational]]:
    index: dict[Monomial, int] = {}
    for polynomial in span + [target]:
        for monomial in polynomial.terms:
            index.setdefault(monomial, len(index))
    if not index:
        return [ZERO] * len(span)
    width = len(span) + 1
    rows = [[QQ_I.zero] * width for _ in range(len(index))]
    for column, polynomial in enumerate(span + [target]):
        for monomial, coefficient in polynomial.terms.items():
            rows[index[monomial]][column] = coefficient
    reduced, pivots = DomainMatrix(rows, (len(index), width), QQ_I).rref()
    if len(span) in pivots:
        return None
    entries = reduced.to_list()
    solution = [ZERO] * len(span)
    for row, pivot in enumerate(pivots):
        solution[pivot] = entries[row][len(span)]
    return solution


def base_structure_table(context: Optional[RewriteContext] = None) -> StructureTable:
    """Commute L1..L5 on a generic function and read off the table from the span of L_k."""
    context = context or current_context()
    operand = _generic_operand(context)
    span = [apply_L(k, operand, context) for k in range(1, BASE_SIZE + 1)]
    table = []
    for i in range(1, BASE_SIZE + 1):
        row = []
        for j in range(1, BASE_SIZE + 1):
            coefficients = _expand(operator_commutator(i, j, context), span)
            if coefficients is None:
                raise NotClosedError(f"[L{i}, L{j}] leaves the span of L1..L5")
            row.append(tuple(-c for c in coefficients))
        table.append(tuple(row))
    logger.debug("Computed base-space structure table")
    return StructureTable(tuple(table))
