"""
Symmetry operators acting on PSDYM characteristics.

L1..L9 are first-order operators with polynomial coefficients in the
coordinates; the internal operators are [., tau_k] and [., M].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..exceptions import LevelOutOfRangeError
from ..jetexpr import (
    Coordinate, Expr, JetAtom, Monomial, Polynomial, RewriteContext, add_all, as_poly, commutator,
    current_context, multiply, reduce_atom, total_derivative, unit_jet,
)

Y, Z, YB, ZB = Coordinate.Y, Coordinate.Z, Coordinate.YB, Coordinate.ZB

_ONE = (0, 0, 0, 0)
_y, _z, _yb, _zb = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)

# (coefficient, coordinate weight, derivative or None for the identity)
L_TERMS: dict[int, tuple[tuple[int, tuple[int, int, int, int], Optional[Coordinate]], ...]] = {
    1: ((1, _ONE, Y),),
    2: ((1, _ONE, Z),),
    3: ((1, _z, Y), (-1, _yb, ZB)),
    4: ((1, _y, Z), (-1, _zb, YB)),
    5: ((1, _y, Y), (-1, _z, Z), (-1, _yb, YB), (1, _zb, ZB)),
    6: ((1, _ONE, None), (1, _y, Y), (1, _z, Z)),
    7: ((1, _ONE, None), (-1, _yb, YB), (-1, _zb, ZB)),
    # y L6 + zb (y D_zb - z D_yb)
    8: ((1, _y, None), (1, (2, 0, 0, 0), Y), (1, (1, 1, 0, 0), Z), (1, (1, 0, 0, 1), ZB), (-1, (0, 1, 0, 1), YB)),
    # z L6 + yb (z D_yb - y D_zb)
    9: ((1, _z, None), (1, (1, 1, 0, 0), Y), (1, (0, 2, 0, 0), Z), (1, (0, 1, 1, 0), YB), (-1, (1, 0, 1, 0), ZB)),
}


def apply_L(k: int, expr: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    if k not in L_TERMS:
        raise LevelOutOfRangeError(f"L{k} does not exist; expected 1..9")
    context = context or current_context()
    e = as_poly(expr, context)
    parts = []
    for coefficient, weight, coordinate in L_TERMS[k]:
        target = e if coordinate is None else total_derivative(e, coordinate, context)
        if target:
            parts.append(multiply(Polynomial.from_monomial(Monomial(coords=weight), coefficient), target, context))
    return add_all(parts)


@dataclass(frozen=True)
class SymmetryOperator:
    """
    kind "L" with index 1..9, or kind "internal" with index k for tau_k
    and index 0 for the opaque constant M.
    """

    kind: str
    index: int

    @classmethod
    def parse(cls, label: str) -> SymmetryOperator:
        if label == "M":
            return cls("internal", 0)
        if label.startswith("tau") and label[3:].isdigit():
            return cls("internal", int(label[3:]))
        if label.startswith("L") and label[1:].isdigit() and 1 <= int(label[1:]) <= 9:
            return cls("L", int(label[1:]))
        raise ValueError(f"Unknown symmetry operator {label!r}")

    @property
    def label(self) -> str:
        if self.kind == "L":
            return f"L{self.index}"
        return "M" if self.index == 0 else f"tau{self.index}"

    def constant(self, context: RewriteContext) -> Polynomial:
        atom = JetAtom.const("M") if self.index == 0 else JetAtom.tau(self.index)
        return reduce_atom(atom, context)

    def apply(self, expr: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
        context = context or current_context()
        if self.kind == "L":
            return apply_L(self.index, expr, context)
        return commutator(as_poly(expr, context), self.constant(context), context)

    def seed(self, context: Optional[RewriteContext] = None) -> Polynomial:
        """The level-0 characteristic: the operator applied to X."""
        context = context or current_context()
        return self.apply(reduce_atom(JetAtom.x(), context), context)

    def q_seed(self, context: Optional[RewriteContext] = None) -> Optional[Polynomial]:
        """The SDYM characteristic I-related to the seed, when catalogued."""
        context = context or current_context()
        j = reduce_atom(JetAtom.j(), context)
        if self.kind == "internal":
            return multiply(j, self.constant(context), context)
        if self.index == 1:
            return reduce_atom(JetAtom.j(unit_jet(Y)), context)
        if self.index == 2:
            return reduce_atom(JetAtom.j(unit_jet(Z)), context)
        return None


def catalogue(context: Optional[RewriteContext] = None) -> list[SymmetryOperator]:
    """Every operator of the session: tau_1..tau_d, M, L1..L9."""
    context = context or current_context()
    operators = [SymmetryOperator("internal", k) for k in range(1, context.dimension + 1)]
    operators.append(SymmetryOperator("internal", 0))
    operators += [SymmetryOperator("L", k) for k in range(1, 10)]
    return operators


def i_catalogue(context: Optional[RewriteContext] = None) -> list[tuple[Polynomial, Polynomial]]:
    """Known I-related pairs (Q, Phi): (J tau_k, [X, tau_k]), (J_z, X_z), (J_y, X_y), (J, 0)."""
    context = context or current_context()
    pairs = []
    for k in range(1, context.dimension + 1):
        operator = SymmetryOperator("internal", k)
        pairs.append((operator.q_seed(context), operator.seed(context)))
    for index in (2, 1):
        operator = SymmetryOperator("L", index)
        pairs.append((operator.q_seed(context), operator.seed(context)))
    pairs.append((reduce_atom(JetAtom.j(), context), Polynomial()))
    return pairs
