import logging
from typing import Optional

from ..algebra import LieBasis
from ..exceptions import SdymError
from ..jetexpr import Coordinate
from ..repositories import FixtureRepository
from ..series import (
    SolutionFixture, abelian_closed_form_check, abelian_fixture, fixture_invariants, format_exponent,
    random_fixture, residual_report, yang_residual,
)
from ..utils import Result, engine_setting
from .report import CaseOutcome, Report, run_case

logger = logging.getLogger(__name__)


class FixtureService:

    def __init__(self, repo: FixtureRepository):
        self.repo = repo

    def get_fixture(self, kind: str, seed: Optional[int], degree: int,
                    n: Optional[int] = None) -> Result[SolutionFixture] | Result[str]:
        """A cached fixture, solved and stored on a miss."""
        n = n or engine_setting("MATRIX_DIMENSION")
        seed = None if kind == "abelian" else seed
        cached = self.repo.get(kind, seed, degree, n)
        if cached is not None:
            logger.debug(f"Fixture cache hit for {kind}:{seed}:{degree}:{n}")
            return Result.success(cached)

        try:
            basis = LieBasis.sl(n)
            if kind == "abelian":
                fixture = abelian_fixture(degree, basis)
            elif kind == "random":
                fixture = random_fixture(seed, degree, basis)
            else:
                return Result.error(f"Unknown fixture kind: {kind}")
        except SdymError as e:
            logger.error(f"Error building {kind} fixture: {str(e)}")
            return Result.error(f"Error building {kind} fixture: {str(e)}")

        logger.info(f"Built {fixture.tag} fixture at degree {degree}")
        self.repo.save(kind, fixture)
        return Result.success(fixture)

    def get_fixtures(self, seeds: list[int], degree: int,
                     with_abelian: bool = True) -> Result[list[SolutionFixture]] | Result[str]:
        fixtures = []
        kinds = [("random", seed) for seed in seeds] + ([("abelian", None)] if with_abelian else [])
        for kind, seed in kinds:
            result = self.get_fixture(kind, seed, degree)
            if not result.is_success:
                return result
            fixtures.append(result.get_data())
        return Result.success(fixtures)

    def invariant_reports(self, fixture: SolutionFixture, suite: str = "oracle") -> list[Report]:
        """One report per fixture invariant."""
        config = {"fixture": fixture.tag, "degree": fixture.degree, "n": fixture.n}
        checks = {
            name: (lambda series=series: _vanishes(series))
            for name, series in fixture_invariants(fixture).items()
        }
        checks["yang"] = lambda: _vanishes(yang_residual(fixture.J))
        if fixture.tag == "abelian":
            checks["closed_form"] = lambda: _closed_form(fixture)
        else:
            checks["non_abelian"] = lambda: _non_abelian(fixture)
        return [run_case(suite, f"{fixture.tag}:{name}", check, config) for name, check in checks.items()]


def _vanishes(series) -> CaseOutcome:
    report = residual_report(series)
    if report.zero:
        return CaseOutcome(True, "oracle")
    return CaseOutcome(False, "oracle", f"nonzero at {format_exponent(report.witness)}")


def _closed_form(fixture: SolutionFixture) -> CaseOutcome:
    witness = abelian_closed_form_check(fixture.degree, LieBasis.sl(fixture.n))
    if witness is None:
        return CaseOutcome(True, "oracle")
    return CaseOutcome(False, "oracle", f"J differs from exp(-y z H) at {format_exponent(witness)}")


def _non_abelian(fixture: SolutionFixture) -> CaseOutcome:
    bracket = fixture.X.derivative(Coordinate.YB).commutator(fixture.X.derivative(Coordinate.ZB))
    if bracket.is_zero():
        return CaseOutcome(False, "oracle", "[X_yb, X_zb] vanishes")
    return CaseOutcome(True, "oracle")
