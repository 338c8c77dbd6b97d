"""
The rewrite system: reduction of single jet atoms modulo the Backlund
relations and the PSDYM equation, total derivatives, and traces.

    J_y   -> J X_zb                      J_z  -> -J X_yb
    D(Jinv) -> -Jinv D(J) Jinv
    X_{y yb} -> -X_{z zb} + X_yb X_zb - X_zb X_yb       (and prolongations)
    D_zb W -> dzbar_def,  D_yb W -> dybar_def          (registered nonlocals)
"""
from __future__ import annotations

import threading
from contextlib import contextmanager
from typing import Optional

from ..algebra.scalars import as_gaussian
from ..exceptions import RewriteLimitError
from .atoms import (
    AtomKind, Coordinate, InvFactor, Jet, JetAtom, Monomial, TraceAtom, Word,
    canonical_rotation, sub_jets, unit_jet,
)
from .context import RewriteContext, current_context
from .polynomial import Polynomial, add_all, multiply, product
from .words import _folds, cancels, normalize_word

Y, Z, YB, ZB = Coordinate.Y, Coordinate.Z, Coordinate.YB, Coordinate.ZB

_depth = threading.local()


@contextmanager
def _guard(context: RewriteContext):
    depth = getattr(_depth, "value", 0) + 1
    if depth > context.depth_limit:
        raise RewriteLimitError(f"Rewrite nesting exceeded {context.depth_limit}")
    _depth.value = depth
    try:
        yield
    finally:
        _depth.value = depth - 1


def _atom(atom: JetAtom, context: RewriteContext) -> Polynomial:
    return reduce_atom(atom, context)


def _word(*atoms: JetAtom, coefficient=1, context: RewriteContext) -> Polynomial:
    return product([reduce_atom(a, context) for a in atoms], context).scale(as_gaussian(coefficient))


def reduce_atom(atom: JetAtom, context: Optional[RewriteContext] = None) -> Polynomial:
    """Normal form of a single jet atom."""
    context = context or current_context()
    cached = context.atom_cache.get(atom)
    if cached is not None:
        return cached
    with _guard(context):
        result = _reduce(atom, context)
    # a free W may be registered later
    if atom.kind != AtomKind.NONLOCAL or atom.name in context.registry:
        context.atom_cache[atom] = result
    return result


def _reduce(atom: JetAtom, context: RewriteContext) -> Polynomial:
    jet = atom.jet
    kind = atom.kind

    if kind == AtomKind.CONST:
        return Polynomial() if any(jet) else Polynomial.of_atom(atom)

    if kind == AtomKind.J:
        if context.bt and jet[Y]:
            base = _word(JetAtom.j(), JetAtom.x(unit_jet(ZB)), context=context)
            return apply_derivatives(base, sub_jets(jet, unit_jet(Y)), context)
        if context.bt and jet[Z]:
            base = _word(JetAtom.j(), JetAtom.x(unit_jet(YB)), coefficient=-1, context=context)
            return apply_derivatives(base, sub_jets(jet, unit_jet(Z)), context)
        return Polynomial.of_atom(atom)

    if kind == AtomKind.JINV:
        if atom.is_underived:
            return Polynomial.of_atom(atom)
        coordinate = next(c for c in Coordinate if jet[c])
        jinv = Polynomial.of_atom(JetAtom.jinv())
        derived_j = _atom(JetAtom.j(unit_jet(coordinate)), context)
        base = -product((jinv, derived_j, jinv), context)
        return apply_derivatives(base, sub_jets(jet, unit_jet(coordinate)), context)

    if kind == AtomKind.X:
        if context.psdym and jet[Y] and jet[YB]:
            x_zb, x_yb = JetAtom.x(unit_jet(ZB)), JetAtom.x(unit_jet(YB))
            base = (
                -_atom(JetAtom.x((0, 1, 0, 1)), context)
                + _word(x_yb, x_zb, context=context)
                - _word(x_zb, x_yb, context=context)
            )
            return apply_derivatives(base, sub_jets(jet, (1, 0, 1, 0)), context)
        return Polynomial.of_atom(atom)

    if kind == AtomKind.GENERIC:
        if atom.name in context.symmetric and jet[Y] and jet[YB]:
            return apply_derivatives(_symmetry_relation(atom.name, context), sub_jets(jet, (1, 0, 1, 0)), context)
        return Polynomial.of_atom(atom)

    if kind == AtomKind.NONLOCAL:
        definition = context.registry.get(atom.name)
        if definition is not None and jet[ZB]:
            return apply_derivatives(definition.dzbar_def, sub_jets(jet, unit_jet(ZB)), context)
        if definition is not None and jet[YB]:
            return apply_derivatives(definition.dybar_def, sub_jets(jet, unit_jet(YB)), context)
        return Polynomial.of_atom(atom)

    raise ValueError(f"Unknown atom kind {kind!r}")


def _symmetry_relation(name: str, context: RewriteContext) -> Polynomial:
    """Phi_{y yb} solved from the linearized PSDYM equation."""
    phi = lambda jet: JetAtom.generic(name, jet)
    x_yb, x_zb = JetAtom.x(unit_jet(YB)), JetAtom.x(unit_jet(ZB))
    phi_yb, phi_zb = phi(unit_jet(YB)), phi(unit_jet(ZB))
    return add_all([
        -_atom(phi((0, 1, 0, 1)), context),
        _word(x_zb, phi_yb, coefficient=-1, context=context),
        _word(phi_yb, x_zb, context=context),
        _word(x_yb, phi_zb, context=context),
        _word(phi_zb, x_yb, coefficient=-1, context=context),
    ])


def apply_derivatives(polynomial: Polynomial, jet: Jet, context: Optional[RewriteContext] = None) -> Polynomial:
    """D^jet applied in the fixed order y, z, yb, zb."""
    context = context or current_context()
    for coordinate in Coordinate:
        for _ in range(jet[coordinate]):
            if not polynomial:
                return polynomial
            polynomial = total_derivative(polynomial, coordinate, context)
    return polynomial


def _is_opaque(monomial: Monomial) -> bool:
    return (
        not monomial.traces and not monomial.coords[ZB]
        and len(monomial.word) == 1 and isinstance(monomial.word[0], InvFactor)
    )


def total_derivative(polynomial: Polynomial, coordinate: Coordinate,
                     context: Optional[RewriteContext] = None) -> Polynomial:
    """
    Leibniz expansion followed by reduction. For coordinate != zb the
    opaque antiderivatives are combined first, D_c D_zb^-1 = D_zb^-1 D_c,
    so that exactness of the combined integrand is not lost.
    """
    from .antiderivative import inv_dzbar

    context = context or current_context()
    parts = []
    if coordinate != ZB:
        inner = []
        for monomial, coefficient in polynomial.terms.items():
            if _is_opaque(monomial):
                weight = Polynomial.from_monomial(Monomial(coords=monomial.coords), coefficient)
                inner.append(multiply(weight, monomial.word[0].content, context))
            else:
                parts.append(_derive_monomial(monomial, coordinate, context).scale(coefficient))
        if inner:
            parts.append(inv_dzbar(total_derivative(add_all(inner), coordinate, context), context))
    else:
        for monomial, coefficient in polynomial.terms.items():
            parts.append(_derive_monomial(monomial, coordinate, context).scale(coefficient))
    return add_all(parts)


def _derive_factor(factor, coordinate: Coordinate, context: RewriteContext) -> Polynomial:
    if isinstance(factor, JetAtom):
        return reduce_atom(factor.derived(coordinate), context)
    if coordinate == ZB:
        return factor.content
    from .antiderivative import inv_dzbar
    return inv_dzbar(total_derivative(factor.content, coordinate, context), context)


def _derive_monomial(monomial: Monomial, coordinate: Coordinate, context: RewriteContext) -> Polynomial:
    parts = []
    power = monomial.coords[coordinate]
    if power:
        lowered = Monomial(sub_jets(monomial.coords, unit_jet(coordinate)), monomial.traces, monomial.word)
        parts.append(Polynomial.from_monomial(lowered, power))

    for i, trace_atom in enumerate(monomial.traces):
        derived = trace_poly(total_derivative(Polynomial.of_word(trace_atom.word), coordinate, context), context)
        if derived:
            others = monomial.traces[:i] + monomial.traces[i + 1:]
            rest = Polynomial.from_monomial(Monomial(monomial.coords, others, monomial.word))
            parts.append(multiply(derived, rest, context))

    for i, factor in enumerate(monomial.word):
        derived = _derive_factor(factor, coordinate, context)
        if not derived:
            continue
        left = Polynomial.from_monomial(Monomial(monomial.coords, monomial.traces, monomial.word[:i]))
        right = Polynomial.of_word(monomial.word[i + 1:])
        parts.append(product((left, derived, right), context))
    return add_all(parts)


def trace_word(word: Word, context: Optional[RewriteContext] = None) -> Polynomial:
    """Scalar tr(word) times the identity."""
    context = context or current_context()
    while len(word) >= 2 and cancels(word[-1], word[0]):
        word = word[1:-1]
    if not word:
        return Polynomial.identity(context.basis.n)
    if len(word) >= 2 and _folds(word[-1], word[0], context):
        rotated = (word[-1],) + word[:-1]
        return add_all(
            trace_word(folded, context).scale(coefficient)
            for folded, coefficient in normalize_word(rotated, context).items()
        )
    if len(word) == 1 and isinstance(word[0], InvFactor):
        # tr commutes with D_zb^-1
        from .antiderivative import inv_dzbar
        return inv_dzbar(trace_poly(word[0].content, context), context)
    if len(word) == 1 and isinstance(word[0], JetAtom):
        atom = word[0]
        if atom.kind == AtomKind.CONST:
            return Polynomial()
        if atom.kind == AtomKind.X and context.traceless_x:
            return Polynomial()
    return Polynomial.of_trace(TraceAtom(canonical_rotation(word)))


def trace_poly(polynomial: Polynomial, context: Optional[RewriteContext] = None) -> Polynomial:
    context = context or current_context()
    parts = []
    for monomial, coefficient in polynomial.terms.items():
        traced = trace_word(monomial.word, context)
        if traced:
            parts.append(multiply(Polynomial.from_monomial(monomial.scalar_part(), coefficient), traced, context))
    return add_all(parts)


def renormalize(polynomial: Polynomial, context: Optional[RewriteContext] = None) -> Polynomial:
    """Rebuild every monomial from its factors; a no-op on genuine normal forms."""
    from .antiderivative import inv_dzbar

    context = context or current_context()
    parts = []
    for monomial, coefficient in polynomial.terms.items():
        pieces = [Polynomial.from_monomial(Monomial(coords=monomial.coords), coefficient)]
        for trace_atom in monomial.traces:
            pieces.append(trace_poly(renormalize(Polynomial.of_word(trace_atom.word), context), context))
        for factor in monomial.word:
            if isinstance(factor, JetAtom):
                pieces.append(reduce_atom(factor, context))
            else:
                pieces.append(inv_dzbar(renormalize(factor.content, context), context))
        parts.append(product(pieces, context))
    return add_all(parts)
