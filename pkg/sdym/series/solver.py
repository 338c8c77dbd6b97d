"""
Order-by-order solvers for PSDYM and the Backlund pair.

Coefficients are indexed X[a, b, c, e] for y^a z^b yb^c zb^e. Free data
lives on a*c = 0; every other coefficient is fixed by

    a c X[a,b,c,e] = -(b+1)(e+1) X[a-1,b+1,c-1,e+1] + ([X_yb, X_zb])[a-1,b,c-1,e]

processed by degree, and within a degree by increasing y exponent.
"""
from __future__ import annotations

import logging
from typing import Callable, Mapping, Optional

from ..algebra import ConstMatrix, as_gaussian
from ..jetexpr import Coordinate
from .truncated import ORIGIN, Exponent, TruncatedSeries, degree, exponents, series_inverse, shift, sub_exponents

logger = logging.getLogger(__name__)

FreeData = Callable[[Exponent], Optional[ConstMatrix]]

Y, Z, YB, ZB = (int(c) for c in (Coordinate.Y, Coordinate.Z, Coordinate.YB, Coordinate.ZB))


def is_free(exponent: Exponent) -> bool:
    return exponent[Y] == 0 or exponent[YB] == 0


def _bracket_coefficient(x: Mapping[Exponent, ConstMatrix], target: Exponent, n: int) -> ConstMatrix:
    """Coefficient of [X_yb, X_zb] at ``target`` from already solved coefficients."""
    total = ConstMatrix.zero(n)
    for u in sub_exponents(target):
        v = tuple(t - s for t, s in zip(target, u))
        u_yb, u_zb = shift(u, YB), shift(u, ZB)
        v_yb, v_zb = shift(v, YB), shift(v, ZB)
        if u_yb in x and v_zb in x:
            total = total + (x[u_yb] * x[v_zb]).scale(as_gaussian(u_yb[YB] * v_zb[ZB]))
        if u_zb in x and v_yb in x:
            total = total - (x[u_zb] * x[v_yb]).scale(as_gaussian(u_zb[ZB] * v_yb[YB]))
    return total


def solve_psdym(free_data: FreeData, cap: int, n: int) -> TruncatedSeries:
    """X through degree ``cap`` from its values on the free exponents."""
    x: dict[Exponent, ConstMatrix] = {}
    ordered = sorted(exponents(cap), key=lambda e: (degree(e), e[Y], e))
    for e in ordered:
        a, b, c, f = e
        if is_free(e):
            value = free_data(e)
            if value is not None and not value.is_zero():
                x[e] = value
            continue
        target = (a - 1, b, c - 1, f)
        value = _bracket_coefficient(x, target, n)
        mixed = (a - 1, b + 1, c - 1, f + 1)
        if mixed in x:
            value = value - x[mixed].scale(as_gaussian((b + 1) * (f + 1)))
        if not value.is_zero():
            x[e] = value.scale(as_gaussian(1) / as_gaussian(a * c))
    return TruncatedSeries.build(n, cap, cap, x)


def solve_J(x: TruncatedSeries, j0: TruncatedSeries) -> tuple[TruncatedSeries, TruncatedSeries]:
    """
    J with J_y = J X_zb and J_z = -J X_yb, and J restricted to y = z = 0
    equal to ``j0``. Returns (J, J^-1).
    """
    n, cap = x.n, x.cap
    x_zb, x_yb = x.derivative(ZB), x.derivative(YB)
    j: dict[Exponent, ConstMatrix] = {}
    ordered = sorted(exponents(cap), key=lambda e: (e[Y] + e[Z], degree(e), e))
    for e in ordered:
        a, b = e[Y], e[Z]
        if a == 0 and b == 0:
            value = j0.coefficient(e)
        elif a >= 1:
            value = _convolve(j, x_zb, shift(e, Y, -1), n).scale(as_gaussian(1) / as_gaussian(a))
        else:
            value = -_convolve(j, x_yb, shift(e, Z, -1), n).scale(as_gaussian(1) / as_gaussian(b))
        if not value.is_zero():
            j[e] = value
    solved = TruncatedSeries.build(n, cap, cap, j)
    if solved.coefficient(ORIGIN).is_zero():
        logger.warning("J has a vanishing constant term")
    return solved, series_inverse(solved)


def _convolve(left: Mapping[Exponent, ConstMatrix], right: TruncatedSeries, target: Exponent, n: int) -> ConstMatrix:
    total = ConstMatrix.zero(n)
    for u in sub_exponents(target):
        if u not in left:
            continue
        v = tuple(t - s for t, s in zip(target, u))
        if v in right.coeffs:
            total = total + left[u] * right.coeffs[v]
    return total
