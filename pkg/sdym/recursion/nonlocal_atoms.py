"""Nonlocal potentials of the covering: W with D_zb W = A_y(phi), D_yb W = -A_z(phi)."""
from __future__ import annotations

from typing import Optional

from ..frechet import cov_Ay, cov_Az
from ..jetexpr import (
    AtomKind, Coordinate, Expr, JetAtom, NonlocalDefinition, NonlocalRegistry, Polynomial,
    RewriteContext, as_poly, current_context, total_derivative,
)

NonlocalAtom = NonlocalDefinition


def materialize(phi: Expr, level: int, context: Optional[RewriteContext] = None, origin: str = "") -> JetAtom:
    """Register the potential of ``phi`` as a named nonlocal atom."""
    context = context or current_context()
    phi = as_poly(phi, context)
    return context.registry.register(cov_Ay(phi, context), -cov_Az(phi, context), level, origin=origin)


def consistency_residual(definition: NonlocalDefinition, context: Optional[RewriteContext] = None) -> Polynomial:
    """D_yb(dzbar_def) - D_zb(dybar_def); zero whenever the source is a PSDYM symmetry."""
    context = context or current_context()
    return (
        total_derivative(definition.dzbar_def, Coordinate.YB, context)
        - total_derivative(definition.dybar_def, Coordinate.ZB, context)
    )


def nonlocal_names(expr: Polynomial, context: Optional[RewriteContext] = None) -> set[str]:
    """Registered nonlocal atoms occurring anywhere in ``expr``."""
    context = context or current_context()
    return {
        atom.name for atom in expr.atoms()
        if atom.kind == AtomKind.NONLOCAL and atom.name in context.registry
    }


__all__ = ["NonlocalAtom", "NonlocalRegistry", "materialize", "consistency_residual", "nonlocal_names"]
