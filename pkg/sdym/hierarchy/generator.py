from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Union

from ..exceptions import LevelOutOfRangeError, SeedNotSymmetryError
from ..frechet import Characteristic, cov_Ay, cov_Az, psdym_residual
from ..jetexpr import (
    AtomKind, Coordinate, Expr, InvFactor, Polynomial, RewriteContext, as_poly, current_context,
    exact_antiderivative, total_derivative,
)
from ..recursion import lift_J
from .operators import SymmetryOperator

logger = logging.getLogger(__name__)

SeedCheck = Union[bool, Callable[[Polynomial], bool]]


def _monomial_is_local(monomial, context: RewriteContext) -> bool:
    factors = [f for t in monomial.traces for f in t.word] + list(monomial.word)
    return not any(
        isinstance(f, InvFactor) or (f.kind == AtomKind.NONLOCAL and f.name in context.registry)
        for f in factors
    )


def local_in_x(expr: Polynomial, context: Optional[RewriteContext] = None) -> bool:
    context = context or current_context()
    return all(_monomial_is_local(monomial, context) for monomial in expr.terms)


def local_in_j(expr: Polynomial, context: Optional[RewriteContext] = None) -> bool:
    """
    Local in X, and every X jet carries a yb or zb derivative, so that the
    Backlund relations express it through J.
    """
    context = context or current_context()
    if not local_in_x(expr, context):
        return False
    return all(
        atom.jet[Coordinate.YB] + atom.jet[Coordinate.ZB] >= 1
        for atom in expr.atoms() if atom.kind == AtomKind.X
    )


@dataclass(frozen=True)
class HierarchyEntry:
    family: str
    level: int
    phi: Polynomial
    q: Optional[Polynomial] = None
    nonlocal_name: Optional[str] = None
    phi_local_in_x: bool = True
    q_local_in_j: Optional[bool] = None

    @property
    def label(self) -> str:
        return f"{self.family}^({self.level})"

    def characteristic(self) -> Characteristic:
        return Characteristic(q=self.q, phi=self.phi, name=self.label)


def _entry(family: str, level: int, phi: Polynomial, q: Optional[Polynomial],
           nonlocal_name: Optional[str], context: RewriteContext) -> HierarchyEntry:
    return HierarchyEntry(
        family=family,
        level=level,
        phi=phi,
        q=q,
        nonlocal_name=nonlocal_name,
        phi_local_in_x=local_in_x(phi, context),
        q_local_in_j=None if q is None else local_in_j(q, context),
    )


def next_level(previous: HierarchyEntry, context: Optional[RewriteContext] = None) -> HierarchyEntry:
    """
    R applied to the previous level. The exact antiderivative is used when
    it also satisfies the yb relation; otherwise a nonlocal atom carrying
    both defining relations is registered.
    """
    context = context or current_context()
    level = previous.level + 1
    q = None if previous.q is None else lift_J(previous.phi, context)
    if previous.phi.is_zero():
        return _entry(previous.family, level, Polynomial(), q, None, context)

    dzbar_def = cov_Ay(previous.phi, context)
    dybar_def = -cov_Az(previous.phi, context)
    exact = exact_antiderivative(dzbar_def, context)
    if exact is not None and (total_derivative(exact, Coordinate.YB, context) - dybar_def).is_zero():
        return _entry(previous.family, level, exact, q, None, context)

    atom = context.registry.register(dzbar_def, dybar_def, level, origin=f"{previous.family}^({level})")
    logger.debug("Level %d of %s is nonlocal: %s", level, previous.family, atom.name)
    return _entry(previous.family, level, Polynomial.of_atom(atom), q, atom.name, context)


def _check_seed(seed: Polynomial, seed_check: SeedCheck, family: str, context: RewriteContext) -> None:
    if seed_check is False or seed_check is None:
        return
    if seed_check is True:
        holds = psdym_residual(seed, context).is_zero()
    else:
        holds = seed_check(seed)
    if not holds:
        raise SeedNotSymmetryError(f"Seed of {family} is not a PSDYM symmetry: {seed}")


def generate_hierarchy(seed: Expr, depth: int, family: str = "seed", q_seed: Optional[Expr] = None,
                       context: Optional[RewriteContext] = None,
                       seed_check: SeedCheck = True) -> list[HierarchyEntry]:
    """Entries for levels 0..depth of R^n seed, with T^n q_seed alongside when given."""
    if depth < 0:
        raise LevelOutOfRangeError(f"Depth must be >= 0, got {depth}")
    context = context or current_context()
    phi = as_poly(seed, context)
    _check_seed(phi, seed_check, family, context)
    q = None if q_seed is None else as_poly(q_seed, context)

    entries = [_entry(family, 0, phi, q, None, context)]
    for _ in range(depth):
        entries.append(next_level(entries[-1], context))
    return entries


class HierarchyCatalog:
    """
    Hierarchies of catalogued operators, generated on demand and extended
    level by level so every nonlocal atom is registered once.
    """

    def __init__(self, context: Optional[RewriteContext] = None, seed_check: SeedCheck = True):
        self.context = context or current_context()
        self.seed_check = seed_check
        self._families: dict[str, list[HierarchyEntry]] = {}

    def hierarchy(self, operator: SymmetryOperator, depth: int) -> list[HierarchyEntry]:
        entries = self._families.get(operator.label)
        if entries is None:
            entries = generate_hierarchy(
                operator.seed(self.context), 0, family=operator.label,
                q_seed=operator.q_seed(self.context), context=self.context,
                seed_check=self.seed_check,
            )
            self._families[operator.label] = entries
        while len(entries) <= depth:
            entries.append(next_level(entries[-1], self.context))
        return entries[:depth + 1]

    def entry(self, operator: SymmetryOperator, level: int) -> HierarchyEntry:
        if level < 0:
            raise LevelOutOfRangeError(f"Level must be >= 0, got {level}")
        return self.hierarchy(operator, level)[level]
