"""
Exact truncated power series in (y, z, yb, zb) with matrix coefficients.

Each series carries a cap D and a valid degree: coefficients of total
degree <= valid are exact; nothing above it is stored. Derivatives cost
one degree of validity, zb-antiderivatives restore one (up to D).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, Iterator, Mapping, Optional

from ..algebra import ConstMatrix, ZERO, as_gaussian, const_inverse, magnitude, trace
from ..exceptions import SingularMatrixError, SingularSeriesError

Exponent = tuple[int, int, int, int]
ORIGIN: Exponent = (0, 0, 0, 0)


def degree(exponent: Exponent) -> int:
    return sum(exponent)


@lru_cache(maxsize=None)
def exponents(max_degree: int) -> tuple[Exponent, ...]:
    """All exponents of total degree <= max_degree, graded then lexicographic."""
    found = [e for e in cartesian(range(max_degree + 1), repeat=4) if sum(e) <= max_degree]
    return tuple(sorted(found, key=lambda e: (sum(e), e)))


def sub_exponents(exponent: Exponent) -> Iterator[Exponent]:
    """Every u <= exponent componentwise."""
    return cartesian(*(range(k + 1) for k in exponent))


def shift(exponent: Exponent, axis: int, amount: int = 1) -> Exponent:
    e = list(exponent)
    e[axis] += amount
    return tuple(e)


@dataclass(frozen=True)
class TruncatedSeries:
    n: int
    cap: int
    valid: int
    coeffs: Mapping[Exponent, ConstMatrix] = field(default_factory=dict)

    @classmethod
    def build(cls, n: int, cap: int, valid: int, coeffs: Mapping[Exponent, ConstMatrix]) -> TruncatedSeries:
        """Drop zero coefficients and everything above the valid degree."""
        valid = min(valid, cap)
        return cls(n, cap, valid, {e: m for e, m in coeffs.items() if degree(e) <= valid and not m.is_zero()})

    @classmethod
    def zero(cls, n: int, cap: int) -> TruncatedSeries:
        return cls(n, cap, cap, {})

    @classmethod
    def constant(cls, matrix: ConstMatrix, cap: int) -> TruncatedSeries:
        return cls.build(matrix.n, cap, cap, {ORIGIN: matrix})

    @classmethod
    def identity(cls, n: int, cap: int) -> TruncatedSeries:
        return cls.constant(ConstMatrix.identity(n), cap)

    @classmethod
    def monomial(cls, exponent: Exponent, matrix: ConstMatrix, cap: int) -> TruncatedSeries:
        return cls.build(matrix.n, cap, cap, {exponent: matrix})

    def coefficient(self, exponent: Exponent) -> ConstMatrix:
        return self.coeffs.get(exponent) or ConstMatrix.zero(self.n)

    def _combine(self, other: TruncatedSeries, sign: int) -> TruncatedSeries:
        valid = min(self.valid, other.valid)
        result = {e: m for e, m in self.coeffs.items() if degree(e) <= valid}
        for e, m in other.coeffs.items():
            if degree(e) > valid:
                continue
            term = m if sign > 0 else -m
            result[e] = result[e] + term if e in result else term
        return TruncatedSeries.build(self.n, self.cap, valid, result)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self._combine(other, 1)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self._combine(other, -1)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.n, self.cap, self.valid, {e: -m for e, m in self.coeffs.items()})

    def scale(self, factor) -> TruncatedSeries:
        factor = as_gaussian(factor)
        return TruncatedSeries.build(self.n, self.cap, self.valid, {e: m.scale(factor) for e, m in self.coeffs.items()})

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        valid = min(self.valid, other.valid)
        result: dict[Exponent, ConstMatrix] = {}
        for e1, m1 in self.coeffs.items():
            d1 = degree(e1)
            for e2, m2 in other.coeffs.items():
                if d1 + degree(e2) > valid:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                term = m1 * m2
                result[e] = result[e] + term if e in result else term
        return TruncatedSeries.build(self.n, self.cap, valid, result)

    def commutator(self, other: TruncatedSeries) -> TruncatedSeries:
        return self * other - other * self

    def derivative(self, axis: int, times: int = 1) -> TruncatedSeries:
        series = self
        for _ in range(times):
            result = {}
            for e, m in series.coeffs.items():
                if e[axis]:
                    result[shift(e, axis, -1)] = m.scale(e[axis])
            series = TruncatedSeries.build(series.n, series.cap, series.valid - 1, result)
        return series

    def antiderivative(self, axis: int = 3) -> TruncatedSeries:
        """Integration in one coordinate with zero integration constant."""
        result = {}
        for e, m in self.coeffs.items():
            raised = shift(e, axis)
            result[raised] = m.scale(as_gaussian(1) / as_gaussian(raised[axis]))
        return TruncatedSeries.build(self.n, self.cap, self.valid + 1, result)

    def restrict(self, valid: int) -> TruncatedSeries:
        return TruncatedSeries.build(self.n, self.cap, min(valid, self.valid), self.coeffs)

    def trace_series(self) -> TruncatedSeries:
        """tr of every coefficient, times the identity."""
        identity = ConstMatrix.identity(self.n)
        return TruncatedSeries.build(
            self.n, self.cap, self.valid, {e: identity.scale(trace(m)) for e, m in self.coeffs.items()}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def first_nonzero(self) -> Optional[tuple[Exponent, ConstMatrix]]:
        for e in exponents(max(self.valid, 0)):
            if e in self.coeffs:
                return e, self.coeffs[e]
        return None

    def max_magnitude(self):
        best = ZERO.x
        for m in self.coeffs.values():
            for value in m.entries():
                size = magnitude(value)
                if size > best:
                    best = size
        return best

    def items(self) -> Iterable[tuple[Exponent, ConstMatrix]]:
        return sorted(self.coeffs.items(), key=lambda item: (degree(item[0]), item[0]))


def scalar_series(exponent: Exponent, n: int, cap: int) -> TruncatedSeries:
    """The coordinate monomial y^a z^b yb^c zb^d times the identity."""
    return TruncatedSeries.monomial(exponent, ConstMatrix.identity(n), cap)


def series_inverse(series: TruncatedSeries) -> TruncatedSeries:
    """Inverse by the recursion S^-1_e = -S_0^-1 sum_{u+v=e, u != 0} S_u S^-1_v."""
    try:
        base = const_inverse(series.coefficient(ORIGIN))
    except SingularMatrixError:
        raise SingularSeriesError("Series has a singular constant term")
    inverse: dict[Exponent, ConstMatrix] = {ORIGIN: base}
    for e in exponents(series.valid)[1:]:
        total = ConstMatrix.zero(series.n)
        for u in sub_exponents(e):
            if u == ORIGIN or u not in series.coeffs:
                continue
            v = tuple(a - b for a, b in zip(e, u))
            if v in inverse:
                total = total + series.coeffs[u] * inverse[v]
        if not total.is_zero():
            inverse[e] = -(base * total)
    return TruncatedSeries.build(series.n, series.cap, series.valid, inverse)
