from .truncated import ORIGIN, Exponent, TruncatedSeries, degree, exponents, scalar_series, series_inverse
from .solver import is_free, solve_J, solve_psdym
from .fixtures import (
    SolutionFixture, abelian_closed_form_check, abelian_fixture, check_fixture, fixture_invariants,
    random_fixture, yang_residual,
)
from .evaluator import SeriesEvaluator, symmetry_binding
from .oracle import FixtureOracle, OracleVerdict, ResidualReport, format_exponent, residual_max, residual_report

__all__ = [
    "ORIGIN", "Exponent", "TruncatedSeries", "degree", "exponents", "scalar_series", "series_inverse",
    "is_free", "solve_J", "solve_psdym",
    "SolutionFixture", "abelian_closed_form_check", "abelian_fixture", "check_fixture", "fixture_invariants",
    "random_fixture", "yang_residual",
    "SeriesEvaluator", "symmetry_binding",
    "FixtureOracle", "OracleVerdict", "ResidualReport", "format_exponent", "residual_max", "residual_report",
]
