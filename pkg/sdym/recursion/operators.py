"""Recursion operators R = D_zb^-1 A_y (PSDYM), T = J R J^-1 (SDYM), and the map I."""
from __future__ import annotations

from typing import Optional

from ..frechet import cov_Ay
from ..jetexpr import Expr, JetAtom, Polynomial, RewriteContext, as_poly, current_context, inv_dzbar, multiply, reduce_atom


def r_hat(phi: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    context = context or current_context()
    return inv_dzbar(cov_Ay(as_poly(phi, context), context), context)


def lift_J(phi: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """J phi: every PSDYM characteristic gives an SDYM one."""
    context = context or current_context()
    return multiply(reduce_atom(JetAtom.j(), context), as_poly(phi, context), context)


def unlift_J(q: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    context = context or current_context()
    return multiply(reduce_atom(JetAtom.jinv(), context), as_poly(q, context), context)


def iso_I(q: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """I{Q} = R(J^-1 Q)."""
    context = context or current_context()
    return r_hat(unlift_J(q, context), context)


def t_hat(q: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    context = context or current_context()
    return lift_J(iso_I(q, context), context)
