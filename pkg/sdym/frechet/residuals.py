"""Symmetry conditions of SDYM and PSDYM, and the checks built on the covariant operators."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..jetexpr import (
    Coordinate, Expr, JetAtom, Polynomial, RewriteContext, as_poly, current_context, multiply,
    reduce_atom, total_derivative,
)
from .characteristic import Characteristic
from .covariant import connection, cov_Ay, cov_Az
from .derivation import frechet

YB, ZB = Coordinate.YB, Coordinate.ZB


def _jinv_times(q: Polynomial, context: RewriteContext) -> Polynomial:
    return multiply(reduce_atom(JetAtom.jinv(), context), q, context)


def sdym_residual(q: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """(D_yb A_y + D_zb A_z)(J^-1 Q)."""
    context = context or current_context()
    reduced = _jinv_times(as_poly(q, context), context)
    return (
        total_derivative(cov_Ay(reduced, context), YB, context)
        + total_derivative(cov_Az(reduced, context), ZB, context)
    )


def psdym_residual(phi: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """A_y Phi_yb + A_z Phi_zb."""
    context = context or current_context()
    phi = as_poly(phi, context)
    return (
        cov_Ay(total_derivative(phi, YB, context), context)
        + cov_Az(total_derivative(phi, ZB, context), context)
    )


def bt17_residuals(characteristic: Characteristic,
                   context: Optional[RewriteContext] = None) -> tuple[Polynomial, Polynomial]:
    """(A_y(J^-1 Q) - Phi_zb, A_z(J^-1 Q) + Phi_yb); both zero iff Q and Phi are Backlund-related."""
    context = context or current_context()
    q, phi = characteristic.require_q(), characteristic.require_phi()
    reduced = _jinv_times(q, context)
    return (
        cov_Ay(reduced, context) - total_derivative(phi, ZB, context),
        cov_Az(reduced, context) + total_derivative(phi, YB, context),
    )


def curvature_residual(operand: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """A_y A_z p - A_z A_y p."""
    context = context or current_context()
    operand = as_poly(operand, context)
    return cov_Ay(cov_Az(operand, context), context) - cov_Az(cov_Ay(operand, context), context)


def verify_zero_curvature(operand: Expr, context: Optional[RewriteContext] = None) -> bool:
    return curvature_residual(operand, context).is_zero()


def identity_15_residual(operand: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """(A_y D_yb + A_z D_zb - D_yb A_y - D_zb A_z) p."""
    context = context or current_context()
    p = as_poly(operand, context)
    left = cov_Ay(total_derivative(p, YB, context), context) + cov_Az(total_derivative(p, ZB, context), context)
    right = total_derivative(cov_Ay(p, context), YB, context) + total_derivative(cov_Az(p, context), ZB, context)
    return left - right


def verify_identity_15(operand: Expr, context: Optional[RewriteContext] = None) -> bool:
    return identity_15_residual(operand, context).is_zero()


@dataclass(frozen=True)
class ConnectionVariation:
    """Both sides of Delta(J^-1 J_c) = A_c(J^-1 Q) for c = y, z."""

    coordinate: Coordinate
    left: Polynomial
    right: Polynomial

    @property
    def holds(self) -> bool:
        return (self.left - self.right).is_zero()


def eq12_sides(characteristic: Characteristic,
               context: Optional[RewriteContext] = None) -> tuple[ConnectionVariation, ConnectionVariation]:
    """
    Evaluated with the Backlund reduction off so that J_y, J_z stay
    independent jets; the caller's other switches are kept.
    """
    context = (context or current_context()).derive(bt=False)
    q = characteristic.require_q()
    reduced = _jinv_times(q, context)
    sides = []
    for coordinate, covariant in ((Coordinate.Y, cov_Ay), (Coordinate.Z, cov_Az)):
        left = frechet(connection(coordinate, context), Characteristic(q=q, name=characteristic.name), context)
        sides.append(ConnectionVariation(coordinate, left, covariant(reduced, context)))
    return sides[0], sides[1]


def verify_eq12(characteristic: Characteristic, context: Optional[RewriteContext] = None) -> bool:
    return all(side.holds for side in eq12_sides(characteristic, context))
