from __future__ import annotations

from functools import singledispatch
from typing import Optional

from .antiderivative import inv_dzbar
from .calculus import reduce_atom, renormalize, total_derivative, trace_poly
from .context import RewriteContext, current_context
from .expr import Atom, Comm, Coord, Deriv, Expr, Identity, InvDzbar, Prod, ScalarMul, Sum, Trace, Zero
from .polynomial import Polynomial, add_all, commutator, product


def normalize(expr: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """Canonical form modulo the Backlund relations and the PSDYM equation."""
    context = context or current_context()
    if isinstance(expr, Polynomial):
        return renormalize(expr, context)
    return _normalize(expr, context)


def as_poly(expr: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """Normal form, trusting values that are already Polynomials."""
    if isinstance(expr, Polynomial):
        return expr
    return normalize(expr, context)


@singledispatch
def _normalize(expr: Expr, context: RewriteContext) -> Polynomial:
    raise TypeError(f"Cannot normalize {type(expr).__name__}")


@_normalize.register
def _(expr: Polynomial, context: RewriteContext) -> Polynomial:
    return renormalize(expr, context)


@_normalize.register
def _(expr: Zero, context: RewriteContext) -> Polynomial:
    return Polynomial()


@_normalize.register
def _(expr: Identity, context: RewriteContext) -> Polynomial:
    return Polynomial.identity()


@_normalize.register
def _(expr: Atom, context: RewriteContext) -> Polynomial:
    return reduce_atom(expr.atom, context)


@_normalize.register
def _(expr: Coord, context: RewriteContext) -> Polynomial:
    return Polynomial.of_coordinate(expr.coordinate)


@_normalize.register
def _(expr: Sum, context: RewriteContext) -> Polynomial:
    return add_all(_normalize(term, context) for term in expr.terms)


@_normalize.register
def _(expr: ScalarMul, context: RewriteContext) -> Polynomial:
    return _normalize(expr.expr, context).scale(expr.scalar)


@_normalize.register
def _(expr: Prod, context: RewriteContext) -> Polynomial:
    return product((_normalize(factor, context) for factor in expr.factors), context)


@_normalize.register
def _(expr: Comm, context: RewriteContext) -> Polynomial:
    return commutator(_normalize(expr.left, context), _normalize(expr.right, context), context)


@_normalize.register
def _(expr: InvDzbar, context: RewriteContext) -> Polynomial:
    return inv_dzbar(_normalize(expr.expr, context), context)


@_normalize.register
def _(expr: Deriv, context: RewriteContext) -> Polynomial:
    return total_derivative(_normalize(expr.expr, context), expr.coordinate, context)


@_normalize.register
def _(expr: Trace, context: RewriteContext) -> Polynomial:
    return trace_poly(_normalize(expr.expr, context), context)


def equals_mod_ideal(a: Expr, b: Expr, context: Optional[RewriteContext] = None) -> bool:
    context = context or current_context()
    return (as_poly(a, context) - as_poly(b, context)).is_zero()


def trace_expr(expr: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    context = context or current_context()
    return trace_poly(as_poly(expr, context), context)
