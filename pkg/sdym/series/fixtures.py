"""
Solution fixtures: exact truncated solutions (X, J, J^-1) used as the
numerical oracle for symbolic identities.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Optional

from ..algebra import ConstMatrix, LieBasis, ZERO, rational
from ..exceptions import SdymError
from .solver import YB, Y, Z, ZB, is_free, solve_J, solve_psdym
from .truncated import ORIGIN, Exponent, TruncatedSeries, exponents, series_inverse

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 16


@dataclass(frozen=True)
class SolutionFixture:
    tag: str
    degree: int
    n: int
    X: TruncatedSeries
    J: TruncatedSeries
    Jinv: TruncatedSeries
    seed: Optional[int] = None


def abelian_fixture(cap: int, basis: Optional[LieBasis] = None) -> SolutionFixture:
    """X = (y yb - z zb) H and J = exp(-y z H) with H the last Cartan element."""
    basis = basis or LieBasis.sl(2)
    h = basis.taus[-1]
    n = basis.n
    x = TruncatedSeries.build(n, cap, cap, {(1, 0, 1, 0): h, (0, 1, 0, 1): -h})

    j, jinv = {}, {}
    power = ConstMatrix.identity(n)
    factorial = 1
    k = 0
    while 2 * k <= cap:
        term = power.scale(rational(1, factorial))
        j[(k, k, 0, 0)] = term if k % 2 == 0 else -term
        jinv[(k, k, 0, 0)] = term
        k += 1
        power = power * h
        factorial *= k
    return SolutionFixture(
        tag="abelian", degree=cap, n=n, X=x,
        J=TruncatedSeries.build(n, cap, cap, j), Jinv=TruncatedSeries.build(n, cap, cap, jinv),
    )


def _random_traceless(rng: random.Random, basis: LieBasis) -> ConstMatrix:
    parts = [rational(rng.randint(-2, 2), rng.choice((1, 2, 3))) for _ in range(basis.dimension)]
    return basis.combine(ZERO, parts)


def _is_abelian(x: TruncatedSeries) -> bool:
    return x.derivative(YB).commutator(x.derivative(ZB)).is_zero()


def random_fixture(seed: int, cap: int, basis: Optional[LieBasis] = None) -> SolutionFixture:
    """
    Random traceless free data with entries in {-2..2}/{1,2,3}, and
    J0 = I plus random terms linear in yb and zb. Attempts are re-rolled
    until [X_yb, X_zb] is nonzero.
    """
    basis = basis or LieBasis.sl(2)
    if cap < 2:
        raise SdymError("Random fixtures need degree >= 2 to be non-abelian")
    for attempt in range(MAX_ATTEMPTS):
        rng = random.Random(f"{seed}:{attempt}")
        free = {e: _random_traceless(rng, basis) for e in exponents(cap) if is_free(e)}
        x = solve_psdym(free.get, cap, basis.n)
        if _is_abelian(x):
            logger.debug("Fixture seed %s attempt %d is abelian, re-rolling", seed, attempt)
            continue
        j0 = TruncatedSeries.build(basis.n, cap, cap, {
            ORIGIN: ConstMatrix.identity(basis.n),
            (0, 0, 1, 0): _random_traceless(rng, basis),
            (0, 0, 0, 1): _random_traceless(rng, basis),
        })
        j, jinv = solve_J(x, j0)
        return SolutionFixture(tag=f"random:{seed}", degree=cap, n=basis.n, X=x, J=j, Jinv=jinv, seed=seed)
    raise SdymError(f"No non-abelian fixture for seed {seed} after {MAX_ATTEMPTS} attempts")


def fixture_invariants(fixture: SolutionFixture) -> dict[str, TruncatedSeries]:
    """Residual series that vanish through their valid degree on a correct fixture."""
    x, j, jinv = fixture.X, fixture.J, fixture.Jinv
    x_yb, x_zb = x.derivative(YB), x.derivative(ZB)
    left_y = jinv * j.derivative(Y)
    left_z = jinv * j.derivative(Z)
    return {
        "psdym": x.derivative(Y).derivative(YB) + x.derivative(Z).derivative(ZB) - x_yb.commutator(x_zb),
        "bt_y": left_y - x_zb,
        "bt_z": left_z + x_yb,
        "sdym": left_y.derivative(YB) + left_z.derivative(ZB),
        "inverse": j * jinv - TruncatedSeries.identity(fixture.n, fixture.degree),
        "trace_x": x.trace_series(),
    }


def check_fixture(fixture: SolutionFixture) -> dict[str, Optional[Exponent]]:
    """First nonzero exponent of every invariant, or None where it holds."""
    report = {}
    for name, residual in fixture_invariants(fixture).items():
        found = residual.first_nonzero()
        report[name] = None if found is None else found[0]
    return report


def yang_residual(j: TruncatedSeries) -> TruncatedSeries:
    """d_yb(J^-1 J_y) + d_zb(J^-1 J_z) for an arbitrary J series."""
    jinv = series_inverse(j)
    return (jinv * j.derivative(Y)).derivative(YB) + (jinv * j.derivative(Z)).derivative(ZB)


def abelian_closed_form_check(cap: int, basis: Optional[LieBasis] = None) -> Optional[Exponent]:
    """
    Solve for J from the abelian X and compare against exp(-y z H). Returns
    the first differing exponent, or None.
    """
    fixture = abelian_fixture(cap, basis)
    j, _ = solve_J(fixture.X, TruncatedSeries.identity(fixture.n, cap))
    found = (j - fixture.J).first_nonzero()
    return None if found is None else found[0]
