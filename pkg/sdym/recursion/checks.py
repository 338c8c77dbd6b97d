"""
Symbolic checks on the recursion operators.

Expressions holding nonlocal atoms or opaque antiderivatives are compared
in the covering: they vanish when both their zb- and yb-derivatives
normalize to zero and every monomial vanishes at yb = zb = 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from ..frechet import Characteristic, frechet, psdym_residual, sdym_residual
from ..jetexpr import (
    AtomKind, Coordinate, Expr, InvFactor, Monomial, Polynomial, RewriteContext, as_poly, commutator,
    current_context, inv_dzbar, total_derivative, trace_poly,
)
from .operators import iso_I, r_hat, t_hat, unlift_J

logger = logging.getLogger(__name__)

Operator = Callable[[Expr], Polynomial]


def _zero_at_origin(monomial: Monomial, context: RewriteContext) -> bool:
    if monomial.coords[Coordinate.YB] or monomial.coords[Coordinate.ZB]:
        return True
    for trace_atom in monomial.traces:
        if any(_factor_zero_at_origin(f, context) for f in trace_atom.word):
            return True
    return any(_factor_zero_at_origin(f, context) for f in monomial.word)


def _factor_zero_at_origin(factor, context: RewriteContext) -> bool:
    if isinstance(factor, InvFactor):
        return True
    return factor.kind == AtomKind.NONLOCAL and factor.name in context.registry


def vanishes_in_covering(expr: Expr, context: Optional[RewriteContext] = None) -> bool:
    context = context or current_context()
    polynomial = as_poly(expr, context)
    if polynomial.is_zero():
        return True
    if not all(_zero_at_origin(monomial, context) for monomial in polynomial.terms):
        return False
    return (
        total_derivative(polynomial, Coordinate.ZB, context).is_zero()
        and total_derivative(polynomial, Coordinate.YB, context).is_zero()
    )


def equal_in_covering(a: Expr, b: Expr, context: Optional[RewriteContext] = None) -> bool:
    context = context or current_context()
    difference = as_poly(a, context) - as_poly(b, context)
    return difference.is_zero() or vanishes_in_covering(difference, context)


@dataclass(frozen=True)
class CommutationSides:
    commutator: Polynomial
    predicted: Polynomial

    @property
    def difference(self) -> Polynomial:
        return self.commutator - self.predicted


def commutation_sides(expr: Expr, characteristic: Characteristic,
                  context: Optional[RewriteContext] = None) -> CommutationSides:
    """[Delta, R] e against D_zb^-1 [Phi_zb, e]."""
    context = context or current_context()
    e = as_poly(expr, context)
    phi = characteristic.require_phi()
    left = frechet(r_hat(e, context), characteristic, context) - r_hat(frechet(e, characteristic, context), context)
    right = inv_dzbar(commutator(total_derivative(phi, Coordinate.ZB, context), e, context), context)
    return CommutationSides(left, right)


def lemma22_check(expr: Expr, characteristic: Characteristic, context: Optional[RewriteContext] = None) -> bool:
    sides = commutation_sides(expr, characteristic, context)
    return equal_in_covering(sides.commutator, sides.predicted, context)


def i_equivalence_check(p_op: Operator, s_op: Operator, sample: Iterable[Expr],
                        context: Optional[RewriteContext] = None,
                        oracle: Optional[Callable[[Polynomial], bool]] = None) -> bool:
    """
    S(I{Q}) = I{P(Q)} for every sample Q. When symbolic comparison is
    inconclusive and an oracle is given, the oracle decides whether the
    difference vanishes.
    """
    context = context or current_context()
    for q in sample:
        q = as_poly(q, context)
        left = as_poly(s_op(iso_I(q, context)), context)
        right = iso_I(as_poly(p_op(q), context), context)
        if equal_in_covering(left, right, context):
            continue
        if oracle is not None and oracle(left - right):
            continue
        logger.debug("I-equivalence fails on %s", q)
        return False
    return True


def psdym_recursion_residual(phi: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """psdym_residual(R Phi); vanishes for every symmetry Phi."""
    context = context or current_context()
    return psdym_residual(r_hat(phi, context), context)


def sdym_recursion_residual(q: Expr, context: Optional[RewriteContext] = None) -> Polynomial:
    """sdym_residual(T Q); vanishes for every symmetry Q."""
    context = context or current_context()
    return sdym_residual(t_hat(q, context), context)


def preserves_trace_psdym(phi: Expr, context: Optional[RewriteContext] = None) -> bool:
    """tr Phi = 0 implies tr(R Phi) = 0."""
    context = context or current_context()
    phi = as_poly(phi, context)
    if not trace_poly(phi, context).is_zero():
        return True
    return trace_poly(r_hat(phi, context), context).is_zero()


def preserves_trace_sdym(q: Expr, context: Optional[RewriteContext] = None) -> bool:
    """tr(J^-1 Q) = 0 implies tr(J^-1 T Q) = 0."""
    context = context or current_context()
    q = as_poly(q, context)
    if not trace_poly(unlift_J(q, context), context).is_zero():
        return True
    return trace_poly(unlift_J(t_hat(q, context), context), context).is_zero()


@dataclass(frozen=True)
class IsomorphismSides:
    x_bracket: Polynomial
    mapped_j_bracket: Polynomial


def isomorphism_sides(a: Characteristic, b: Characteristic,
                      context: Optional[RewriteContext] = None) -> IsomorphismSides:
    """[Delta_a, Delta_b] X against I{[Delta_a, Delta_b] J}."""
    context = context or current_context()
    x_bracket = frechet(b.require_phi(), a, context) - frechet(a.require_phi(), b, context)
    j_bracket = frechet(b.require_q(), a, context) - frechet(a.require_q(), b, context)
    return IsomorphismSides(x_bracket, iso_I(j_bracket, context))


def isomorphism_check(a: Characteristic, b: Characteristic, context: Optional[RewriteContext] = None) -> bool:
    sides = isomorphism_sides(a, b, context)
    return equal_in_covering(sides.x_bracket, sides.mapped_j_bracket, context)
