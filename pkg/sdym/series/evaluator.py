"""
Evaluation of expression trees and normal forms on a solution fixture.

Atoms evaluate to the fixture's series and their derivatives, M to a
fixed traceless matrix, generic characteristics to caller bindings.
Opaque antiderivatives and raw IDzb nodes integrate with zero zb
constant. A registered nonlocal W is rebuilt from both of its defining
relations with W = 0 at yb = zb = 0, and the two must agree.
"""
from __future__ import annotations

import logging
from functools import singledispatchmethod
from typing import Mapping, Optional

from ..algebra import ConstMatrix, as_gaussian
from ..exceptions import NonlocalConflictError, UnresolvedAtomError
from ..jetexpr import (
    Atom, AtomKind, Comm, Coord, Deriv, Expr, Identity, InvDzbar, InvFactor, JetAtom, Polynomial, Prod,
    RewriteContext, ScalarMul, Sum, Trace, Zero, current_context, unit_jet,
)
from .fixtures import SolutionFixture
from .solver import YB, ZB
from .truncated import Exponent, TruncatedSeries, scalar_series

logger = logging.getLogger(__name__)


class SeriesEvaluator:
    def __init__(self, fixture: SolutionFixture, context: Optional[RewriteContext] = None,
                 bindings: Optional[Mapping[str, TruncatedSeries]] = None,
                 m_value: Optional[ConstMatrix] = None, strict: bool = True):
        self.fixture = fixture
        self.context = context or current_context()
        self.bindings = dict(bindings or {})
        self.m_value = m_value if m_value is not None else self.context.basis.default_m()
        self.strict = strict
        self._atoms: dict[JetAtom, TruncatedSeries] = {}
        self._nonlocals: dict[str, TruncatedSeries] = {}

    @property
    def cap(self) -> int:
        return self.fixture.degree

    @property
    def n(self) -> int:
        return self.fixture.n

    def constant(self, matrix: ConstMatrix) -> TruncatedSeries:
        return TruncatedSeries.constant(matrix, self.cap)

    # atoms

    def atom(self, atom: JetAtom) -> TruncatedSeries:
        value = self._atoms.get(atom)
        if value is None:
            value = self._differentiate(self._base_value(atom), atom.jet)
            self._atoms[atom] = value
        return value

    @staticmethod
    def _differentiate(series: TruncatedSeries, jet) -> TruncatedSeries:
        for axis, times in enumerate(jet):
            if times:
                series = series.derivative(axis, times)
        return series

    def _base_value(self, atom: JetAtom) -> TruncatedSeries:
        if atom.kind == AtomKind.X:
            return self.fixture.X
        if atom.kind == AtomKind.J:
            return self.fixture.J
        if atom.kind == AtomKind.JINV:
            return self.fixture.Jinv
        if atom.kind == AtomKind.CONST:
            if self.context.is_known_constant(atom):
                return self.constant(self.context.constant_value(atom))
            if atom.name == "M":
                return self.constant(self.m_value)
        if atom.kind == AtomKind.NONLOCAL and atom.name in self.context.registry:
            return self.nonlocal_value(atom.name)
        if atom.name in self.bindings:
            return self.bindings[atom.name]
        raise UnresolvedAtomError(f"No value for {atom.name} on fixture {self.fixture.tag}")

    def nonlocal_value(self, name: str) -> TruncatedSeries:
        value = self._nonlocals.get(name)
        if value is not None:
            return value
        definition = self.context.registry.get(name)
        zbar = self.evaluate(definition.dzbar_def)
        ybar = self.evaluate(definition.dybar_def)
        coeffs: dict[Exponent, ConstMatrix] = {}
        for e, m in zbar.coeffs.items():
            raised = (e[0], e[1], e[2], e[3] + 1)
            coeffs[raised] = m.scale(as_gaussian(1) / as_gaussian(raised[ZB]))
        for e, m in ybar.coeffs.items():
            if e[ZB] == 0:
                raised = (e[0], e[1], e[2] + 1, 0)
                coeffs[raised] = m.scale(as_gaussian(1) / as_gaussian(raised[YB]))
        value = TruncatedSeries.build(self.n, self.cap, min(zbar.valid, ybar.valid) + 1, coeffs)

        if self.strict:
            conflict = (value.derivative(YB) - ybar).first_nonzero()
            if conflict is not None:
                raise NonlocalConflictError(name, conflict[0])
        self._nonlocals[name] = value
        logger.debug("Reconstructed %s on %s (valid through degree %d)", name, self.fixture.tag, value.valid)
        return value

    # normal forms

    def _factor(self, factor) -> TruncatedSeries:
        if isinstance(factor, InvFactor):
            return self.evaluate(factor.content).antiderivative(ZB)
        return self.atom(factor)

    def _word(self, word) -> TruncatedSeries:
        result = TruncatedSeries.identity(self.n, self.cap)
        for factor in word:
            result = result * self._factor(factor)
        return result

    def _polynomial(self, poly: Polynomial) -> TruncatedSeries:
        total = TruncatedSeries.zero(self.n, self.cap)
        for monomial, coefficient in poly.items():
            term = scalar_series(monomial.coords, self.n, self.cap).scale(coefficient)
            for trace_atom in monomial.traces:
                term = term * self._word(trace_atom.word).trace_series()
            total = total + term * self._word(monomial.word)
        return total

    # trees

    @singledispatchmethod
    def evaluate(self, expr: Expr) -> TruncatedSeries:
        raise TypeError(f"Cannot evaluate {type(expr).__name__}")

    @evaluate.register
    def _(self, expr: Polynomial) -> TruncatedSeries:
        return self._polynomial(expr)

    @evaluate.register
    def _(self, expr: Zero) -> TruncatedSeries:
        return TruncatedSeries.zero(self.n, self.cap)

    @evaluate.register
    def _(self, expr: Identity) -> TruncatedSeries:
        return TruncatedSeries.identity(self.n, self.cap)

    @evaluate.register
    def _(self, expr: Atom) -> TruncatedSeries:
        return self.atom(expr.atom)

    @evaluate.register
    def _(self, expr: Coord) -> TruncatedSeries:
        return scalar_series(unit_jet(expr.coordinate), self.n, self.cap)

    @evaluate.register
    def _(self, expr: Sum) -> TruncatedSeries:
        total = TruncatedSeries.zero(self.n, self.cap)
        for term in expr.terms:
            total = total + self.evaluate(term)
        return total

    @evaluate.register
    def _(self, expr: ScalarMul) -> TruncatedSeries:
        return self.evaluate(expr.expr).scale(expr.scalar)

    @evaluate.register
    def _(self, expr: Prod) -> TruncatedSeries:
        result = TruncatedSeries.identity(self.n, self.cap)
        for factor in expr.factors:
            result = result * self.evaluate(factor)
        return result

    @evaluate.register
    def _(self, expr: Comm) -> TruncatedSeries:
        return self.evaluate(expr.left).commutator(self.evaluate(expr.right))

    @evaluate.register
    def _(self, expr: InvDzbar) -> TruncatedSeries:
        return self.evaluate(expr.expr).antiderivative(ZB)

    @evaluate.register
    def _(self, expr: Deriv) -> TruncatedSeries:
        return self.evaluate(expr.expr).derivative(int(expr.coordinate))

    @evaluate.register
    def _(self, expr: Trace) -> TruncatedSeries:
        return self.evaluate(expr.expr).trace_series()


def symmetry_binding(fixture: SolutionFixture, k: int, context: Optional[RewriteContext] = None) -> TruncatedSeries:
    """[X, tau_k] on a fixture: a concrete value for a symmetric characteristic."""
    context = context or current_context()
    tau = TruncatedSeries.constant(context.basis.tau(k), fixture.degree)
    return fixture.X.commutator(tau)
