"""
The Frechet derivative Delta along a characteristic.

Delta is a derivation that commutes with every total derivative:
Delta J_a = D^a Q, Delta X_a = D^a Phi, Delta Jinv = -Jinv Q Jinv.
Constants, coordinates, generic characteristics and free operands are
inert. A registered nonlocal W varies into a new nonlocal whose defining
relations are the variations of W's.
"""
from __future__ import annotations

from typing import Optional

from ..jetexpr import (
    AtomKind, Coordinate, Expr, InvFactor, JetAtom, Monomial, Polynomial, RewriteContext, add_all,
    apply_derivatives, as_poly, current_context, inv_dzbar, multiply, product, reduce_atom, trace_poly,
)
from .characteristic import Characteristic


def frechet(expr: Expr, characteristic: Characteristic, context: Optional[RewriteContext] = None) -> Polynomial:
    context = context or current_context()
    polynomial = as_poly(expr, context)
    key = (polynomial, characteristic)
    cached = context.frechet_cache.get(key)
    if cached is not None:
        return cached

    parts = []
    inner = []
    for monomial, coefficient in polynomial.terms.items():
        if _is_opaque(monomial):
            weight = Polynomial.from_monomial(Monomial(coords=monomial.coords), coefficient)
            inner.append(multiply(weight, monomial.word[0].content, context))
        else:
            parts.append(_vary_monomial(monomial, characteristic, context).scale(coefficient))
    if inner:
        # Delta D_zb^-1 = D_zb^-1 Delta, applied to the combined integrand
        parts.append(inv_dzbar(frechet(add_all(inner), characteristic, context), context))
    result = add_all(parts)
    context.frechet_cache[key] = result
    return result


def _is_opaque(monomial: Monomial) -> bool:
    return (
        not monomial.traces and not monomial.coords[Coordinate.ZB]
        and len(monomial.word) == 1 and isinstance(monomial.word[0], InvFactor)
    )


def _vary_monomial(monomial: Monomial, characteristic: Characteristic, context: RewriteContext) -> Polynomial:
    parts = []
    for i, trace_atom in enumerate(monomial.traces):
        varied = trace_poly(frechet(Polynomial.of_word(trace_atom.word), characteristic, context), context)
        if varied:
            others = monomial.traces[:i] + monomial.traces[i + 1:]
            parts.append(multiply(varied, Polynomial.from_monomial(Monomial(monomial.coords, others, monomial.word)), context))

    for i, factor in enumerate(monomial.word):
        varied = _vary_factor(factor, characteristic, context)
        if not varied:
            continue
        left = Polynomial.from_monomial(Monomial(monomial.coords, monomial.traces, monomial.word[:i]))
        right = Polynomial.of_word(monomial.word[i + 1:])
        parts.append(product((left, varied, right), context))
    return add_all(parts)


def _vary_factor(factor, characteristic: Characteristic, context: RewriteContext) -> Polynomial:
    if isinstance(factor, InvFactor):
        return inv_dzbar(frechet(factor.content, characteristic, context), context)
    return vary_atom(factor, characteristic, context)


def vary_atom(atom: JetAtom, characteristic: Characteristic, context: Optional[RewriteContext] = None) -> Polynomial:
    context = context or current_context()
    kind = atom.kind
    if kind == AtomKind.X:
        return apply_derivatives(characteristic.require_phi(), atom.jet, context)
    if kind == AtomKind.J:
        return apply_derivatives(characteristic.require_q(), atom.jet, context)
    if kind == AtomKind.JINV:
        jinv = reduce_atom(JetAtom.jinv(), context)
        varied = -product((jinv, characteristic.require_q(), jinv), context)
        return apply_derivatives(varied, atom.jet, context)
    if kind == AtomKind.NONLOCAL and atom.name in context.registry:
        varied = context.registry.variation(
            atom.name, characteristic,
            lambda definition: (
                frechet(definition.dzbar_def, characteristic, context),
                frechet(definition.dybar_def, characteristic, context),
            ),
        )
        return apply_derivatives(Polynomial.of_atom(varied), atom.jet, context)
    return Polynomial()
