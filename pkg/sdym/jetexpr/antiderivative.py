"""
D_zb^-1 on normal forms.

An exact antiderivative is searched for by linear algebra over a finite
candidate set: every monomial of the integrand suggests candidates by
lowering the zb-order of one of its factors, or by raising its zb power;
a second round lowers the monomials those derivatives reach.
The part with no exact antiderivative is kept as opaque factors whose
value at zb = 0 is zero.
"""
from __future__ import annotations

import logging
from typing import Optional

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from ..algebra.scalars import ONE
from .atoms import Coordinate, InvFactor, JetAtom, Monomial, add_jets, sub_jets, unit_jet
from .calculus import total_derivative
from .context import RewriteContext, current_context
from .polynomial import Polynomial, add_all

logger = logging.getLogger(__name__)

ZB = Coordinate.ZB


def _candidates(monomials, context: RewriteContext, seen: set[Polynomial], raising: bool = True) -> list[Polynomial]:
    found: list[Polynomial] = []

    def offer(candidate: Polynomial) -> None:
        if candidate and candidate not in seen:
            seen.add(candidate)
            found.append(candidate)

    for monomial in monomials:
        if raising:
            offer(Polynomial.from_monomial(
                Monomial(add_jets(monomial.coords, unit_jet(ZB)), monomial.traces, monomial.word)
            ))
        for i, factor in enumerate(monomial.word):
            if isinstance(factor, JetAtom) and factor.jet[ZB]:
                lowered = factor.with_jet(sub_jets(factor.jet, unit_jet(ZB)))
                word = monomial.word[:i] + (lowered,) + monomial.word[i + 1:]
                offer(Polynomial.from_factors(monomial.scalar_part(), word, context=context))
    return found


def _solve(target: Polynomial, candidates: list[Polynomial], derivatives: list[Polynomial]) -> Optional[Polynomial]:
    """Find sum c_i cand_i with sum c_i D_zb cand_i = target, or None."""
    if not candidates:
        return None
    index: dict[Monomial, int] = {}
    for polynomial in derivatives + [target]:
        for monomial in polynomial.terms:
            index.setdefault(monomial, len(index))
    width = len(candidates) + 1
    rows = [[QQ_I.zero] * width for _ in range(len(index))]
    for column, polynomial in enumerate(derivatives + [target]):
        for monomial, coefficient in polynomial.terms.items():
            rows[index[monomial]][column] = coefficient
    reduced, pivots = DomainMatrix(rows, (len(index), width), QQ_I).rref()
    if len(candidates) in pivots:
        return None
    entries = reduced.to_list()
    return add_all(
        candidates[pivot].scale(entries[row][len(candidates)])
        for row, pivot in enumerate(pivots)
        if entries[row][len(candidates)]
    )


class _System:
    """Candidates and their zb-derivatives for one integrand."""

    def __init__(self, polynomial: Polynomial, context: RewriteContext):
        self.polynomial = polynomial
        self.context = context
        self.seen: set[Polynomial] = set()
        self.candidates: list[Polynomial] = []
        self.derivatives: list[Polynomial] = []
        self._add(_candidates(polynomial.monomials(), context, self.seen))

    def _add(self, candidates: list[Polynomial]) -> None:
        self.candidates += candidates
        self.derivatives += [total_derivative(candidate, ZB, self.context) for candidate in candidates]

    def widen(self) -> None:
        """
        Lower the monomials the derivatives reach outside the integrand; a
        monomial whose Leibniz terms all cancel in the integrand is found this way.
        """
        reached = {
            monomial: None for derivative in self.derivatives for monomial in derivative.terms
            if monomial not in self.polynomial.terms
        }
        self._add(_candidates(list(reached), self.context, self.seen, raising=False))

    def solve(self, target: Optional[Polynomial] = None) -> Optional[Polynomial]:
        return _solve(self.polynomial if target is None else target, self.candidates, self.derivatives)


def _opaque(polynomial: Polynomial) -> Polynomial:
    """Keep y, z, yb powers outside; the rest goes under an opaque factor."""
    # distinct monomials give distinct (outer powers, inner) pairs
    terms = {}
    for monomial, coefficient in polynomial.terms.items():
        y, z, yb, zb = monomial.coords
        inner = Polynomial.from_monomial(Monomial((0, 0, 0, zb), monomial.traces, monomial.word), ONE)
        outer = Monomial((y, z, yb, 0), (), (InvFactor(inner),))
        terms[outer] = coefficient
    return Polynomial(terms)


def exact_antiderivative(polynomial: Polynomial, context: Optional[RewriteContext] = None) -> Optional[Polynomial]:
    """The exact solution over the candidate set, or None when there is none."""
    context = context or current_context()
    if not polynomial:
        return polynomial
    system = _System(polynomial, context)
    result = system.solve()
    if result is None:
        system.widen()
        result = system.solve()
    return result


def inv_dzbar(polynomial: Polynomial, context: Optional[RewriteContext] = None) -> Polynomial:
    """
    D_zb^-1. The whole integrand is tried first; failing that, its exact
    part is integrated and only a canonical remainder becomes opaque, so
    D_zb^-1(D_zb e + r) = e + D_zb^-1 r.
    """
    context = context or current_context()
    if not polynomial:
        return polynomial
    cache = context.antiderivative_cache
    cached = cache.get(polynomial)
    if cached is not None:
        return cached

    system = _System(polynomial, context)
    result = system.solve()
    if result is None:
        system.widen()
        result = system.solve()
    if result is None:
        stuck = _remainder(polynomial, system.derivatives)
        solved = system.solve(polynomial - stuck) if stuck != polynomial else None
        if solved is None:
            result = _opaque(polynomial)
        else:
            result = solved + _opaque(stuck)
        logger.debug("Partially opaque antiderivative over %d monomials", len(polynomial))
    cache[polynomial] = result
    return result


def _null_vectors(rows: list[list], width: int) -> list[list]:
    """Basis of {c : rows . c = 0}."""
    if not rows:
        return [[QQ_I.one if i == j else QQ_I.zero for i in range(width)] for j in range(width)]
    reduced, pivots = DomainMatrix(rows, (len(rows), width), QQ_I).rref()
    entries = reduced.to_list()
    bound = set(pivots)
    vectors = []
    for free in range(width):
        if free in bound:
            continue
        vector = [QQ_I.zero] * width
        vector[free] = QQ_I.one
        for row, pivot in enumerate(pivots):
            vector[pivot] = -entries[row][free]
        vectors.append(vector)
    return vectors


def _remainder(polynomial: Polynomial, derivatives: list[Polynomial]) -> Polynomial:
    """
    Reduce the integrand modulo the candidate derivatives that stay inside
    its support. Pivots are taken in monomial order, so the remainder only
    depends on that subspace.
    """
    order = polynomial.monomials()
    inside = {monomial: i for i, monomial in enumerate(order)}
    outside: dict[Monomial, int] = {}
    for derivative in derivatives:
        for monomial in derivative.terms:
            if monomial not in inside:
                outside.setdefault(monomial, len(outside))

    width = len(derivatives)
    rows = [[QQ_I.zero] * width for _ in range(len(outside))]
    for column, derivative in enumerate(derivatives):
        for monomial, coefficient in derivative.terms.items():
            if monomial in outside:
                rows[outside[monomial]][column] = coefficient

    # images of the null vectors span the derivatives that land inside the support
    image = []
    for vector in _null_vectors(rows, width):
        row = [QQ_I.zero] * len(order)
        for column, weight in enumerate(vector):
            if weight:
                for monomial, coefficient in derivatives[column].terms.items():
                    if monomial not in inside:
                        continue
                    row[inside[monomial]] += weight * coefficient
        if any(row):
            image.append(row)
    if not image:
        return polynomial

    reduced, pivots = DomainMatrix(image, (len(image), len(order)), QQ_I).rref()
    entries = reduced.to_list()
    target = [polynomial.terms[monomial] for monomial in order]
    remainder = list(target)
    for row, pivot in enumerate(pivots):
        weight = target[pivot]
        if weight:
            remainder = [value - weight * entry for value, entry in zip(remainder, entries[row])]
    return Polynomial({monomial: value for monomial, value in zip(order, remainder) if value})
