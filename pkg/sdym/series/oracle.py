from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from ..algebra import ConstMatrix
from ..exceptions import NonlocalConflictError, UnresolvedAtomError
from ..jetexpr import Coordinate, Expr, RewriteContext, current_context
from .evaluator import SeriesEvaluator
from .fixtures import SolutionFixture
from .solver import YB, ZB
from .truncated import Exponent, TruncatedSeries

logger = logging.getLogger(__name__)

Bindings = Callable[[SolutionFixture], Mapping[str, TruncatedSeries]]
COMPARISONS = ("full", "zbar", "covering")


@dataclass(frozen=True)
class OracleVerdict:
    passed: bool
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.passed


def format_exponent(exponent: Exponent) -> str:
    parts = [f"{c.token}^{exponent[c]}" for c in Coordinate if exponent[c]]
    return " ".join(parts) or "1"


@dataclass(frozen=True)
class ResidualReport:
    zero: bool
    valid: int
    witness: Optional[Exponent] = None
    magnitude: object = None


def residual_report(series: TruncatedSeries) -> ResidualReport:
    found = series.first_nonzero()
    if found is None:
        return ResidualReport(True, series.valid)
    return ResidualReport(False, series.valid, found[0], series.max_magnitude())


def residual_max(expr: Expr, fixture: SolutionFixture, context: Optional[RewriteContext] = None,
                 bindings: Optional[Mapping[str, TruncatedSeries]] = None) -> ResidualReport:
    """Evaluate ``expr`` on one fixture; the witness is its first nonzero monomial."""
    return residual_report(SeriesEvaluator(fixture, context, bindings).evaluate(expr))


class FixtureOracle:
    """
    Decides whether an expression vanishes on every fixture.

    compare="full" checks every coefficient. compare="zbar" checks the zb
    derivative only, for differences whose sides use different zb
    integration constants. compare="covering" checks the yb and zb
    derivatives, the fixture counterpart of equality in the covering.
    """

    def __init__(self, fixtures: Sequence[SolutionFixture], context: Optional[RewriteContext] = None,
                 bindings: Optional[Bindings] = None, compare: str = "full", min_valid: int = 0,
                 m_value: Optional[ConstMatrix] = None):
        if compare not in COMPARISONS:
            raise ValueError(f"Unknown comparison {compare!r}")
        self.fixtures = list(fixtures)
        self.context = context or current_context()
        self.bindings = bindings
        self.compare = compare
        self.min_valid = min_valid
        self.m_value = m_value

    def evaluator(self, fixture: SolutionFixture) -> SeriesEvaluator:
        bindings = self.bindings(fixture) if self.bindings else None
        return SeriesEvaluator(fixture, self.context, bindings, m_value=self.m_value)

    def residuals(self, fixture: SolutionFixture, expr: Expr) -> list[TruncatedSeries]:
        value = self.evaluator(fixture).evaluate(expr)
        if self.compare == "zbar":
            return [value.derivative(ZB)]
        if self.compare == "covering":
            return [value.derivative(ZB), value.derivative(YB)]
        return [value]

    def __call__(self, expr: Expr) -> OracleVerdict:
        for fixture in self.fixtures:
            try:
                reports = [residual_report(series) for series in self.residuals(fixture, expr)]
            except NonlocalConflictError as e:
                return OracleVerdict(False, f"{fixture.tag}: {e.name} conflicts at {format_exponent(e.witness)}")
            except UnresolvedAtomError as e:
                return OracleVerdict(False, f"{fixture.tag}: {e}")
            for report in reports:
                if report.valid < self.min_valid:
                    return OracleVerdict(False, f"{fixture.tag}: only valid through degree {report.valid}")
                if not report.zero:
                    logger.debug("Oracle residual on %s at %s", fixture.tag, report.witness)
                    return OracleVerdict(False, f"{fixture.tag}: nonzero at {format_exponent(report.witness)}")
        return OracleVerdict(True)
