"""
Covariant derivatives A_y = D_y + [J^-1 J_y, .] and A_z = D_z + [J^-1 J_z, .].

On shell the connections are X_zb and -X_yb. With the Backlund reduction
switched off the connections are kept literally.
"""
from __future__ import annotations

from typing import Optional

from ..jetexpr import (
    Coordinate, Expr, JetAtom, Polynomial, RewriteContext, as_poly, commutator, current_context,
    multiply, reduce_atom, total_derivative, unit_jet,
)


def connection(coordinate: Coordinate, context: Optional[RewriteContext] = None) -> Polynomial:
    """J^-1 D_c J for c in {y, z}, in normal form."""
    context = context or current_context()
    if context.bt:
        if coordinate == Coordinate.Y:
            return reduce_atom(JetAtom.x(unit_jet(Coordinate.ZB)), context)
        return -reduce_atom(JetAtom.x(unit_jet(Coordinate.YB)), context)
    return multiply(
        reduce_atom(JetAtom.jinv(), context), reduce_atom(JetAtom.j(unit_jet(coordinate)), context), context
    )


def _covariant(expr: Expr, coordinate: Coordinate, context: Optional[RewriteContext]) -> Polynomial:
    context = context or current_context()
    polynomial = as_poly(expr, context)
    return total_derivative(polynomial, coordinate, context) + commutator(
        connection(coordinate, context), polynomial, context
    )


def cov_Ay(expr: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    return _covariant(expr, Coordinate.Y, context)


def cov_Az(expr: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    return _covariant(expr, Coordinate.Z, context)
