"""
Expression trees as produced by the parser and by hand-built formulas.

Trees are never compared structurally for mathematical equality; call
``normalize`` (or ``equals_mod_ideal``) for that.
"""
from __future__ import annotations

from dataclasses import dataclass

from sympy import QQ

from ..algebra.scalars import GaussianRational, as_gaussian
from .atoms import Coordinate, JetAtom


class Expr:
    """Operator sugar shared by every tree node and by Polynomial."""

    def __add__(self, other) -> Expr:
        return Sum((self, to_expr(other)))

    def __radd__(self, other) -> Expr:
        return Sum((to_expr(other), self))

    def __sub__(self, other) -> Expr:
        return Sum((self, ScalarMul(as_gaussian(-1), to_expr(other))))

    def __rsub__(self, other) -> Expr:
        return Sum((to_expr(other), ScalarMul(as_gaussian(-1), self)))

    def __neg__(self) -> Expr:
        return ScalarMul(as_gaussian(-1), self)

    def __mul__(self, other) -> Expr:
        if _is_scalar(other):
            return ScalarMul(as_gaussian(other), self)
        return Prod((self, to_expr(other)))

    def __rmul__(self, other) -> Expr:
        if _is_scalar(other):
            return ScalarMul(as_gaussian(other), self)
        return Prod((to_expr(other), self))


def _is_scalar(value) -> bool:
    return isinstance(value, (int, GaussianRational)) or QQ.of_type(value)


def to_expr(value) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, JetAtom):
        return Atom(value)
    if _is_scalar(value):
        return ScalarMul(as_gaussian(value), Identity())
    raise TypeError(f"Cannot use {type(value).__name__} as an expression")


@dataclass(frozen=True, eq=True)
class Zero(Expr):
    pass


@dataclass(frozen=True, eq=True)
class Identity(Expr):
    pass


@dataclass(frozen=True, eq=True)
class Atom(Expr):
    atom: JetAtom


@dataclass(frozen=True, eq=True)
class Coord(Expr):
    """Scalar coordinate function used by the base-space symmetry operators."""

    coordinate: Coordinate


@dataclass(frozen=True, eq=True)
class Sum(Expr):
    terms: tuple[Expr, ...]


@dataclass(frozen=True, eq=True)
class ScalarMul(Expr):
    scalar: GaussianRational
    expr: Expr


@dataclass(frozen=True, eq=True)
class Prod(Expr):
    factors: tuple[Expr, ...]


@dataclass(frozen=True, eq=True)
class Comm(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, eq=True)
class InvDzbar(Expr):
    expr: Expr


@dataclass(frozen=True, eq=True)
class Deriv(Expr):
    expr: Expr
    coordinate: Coordinate


@dataclass(frozen=True, eq=True)
class Trace(Expr):
    expr: Expr
