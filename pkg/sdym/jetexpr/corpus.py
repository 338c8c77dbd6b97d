"""Seeded random expression trees for the normal-form property checks."""
from __future__ import annotations

import random
from typing import Optional, Sequence

from ..algebra.scalars import rational
from .atoms import Coordinate, JetAtom, unit_jet
from .context import RewriteContext, current_context
from .expr import Atom, Comm, Deriv, Expr, Identity, InvDzbar, Prod, ScalarMul, Sum


def _x_leaves() -> list[JetAtom]:
    leaves = [JetAtom.x()]
    leaves += [JetAtom.x(unit_jet(c)) for c in Coordinate]
    leaves += [JetAtom.x((1, 0, 1, 0)), JetAtom.x((0, 1, 0, 1))]
    return leaves


def default_leaves(context: Optional[RewriteContext] = None, x_only: bool = False) -> list[JetAtom]:
    context = context or current_context()
    leaves = _x_leaves()
    if x_only:
        return leaves
    leaves += [JetAtom.j(), JetAtom.jinv(), JetAtom.const("M")]
    leaves += [JetAtom.tau(k) for k in range(1, context.dimension + 1)]
    return leaves


_SCALARS = [rational(1), rational(-1), rational(2), rational(1, 2), rational(-3, 2)]

LOCAL_KINDS = ("sum", "prod", "comm", "scale", "deriv")
ALL_KINDS = LOCAL_KINDS + ("inv_dzbar",)


def random_expr(rng: random.Random, depth: int, leaves: Sequence[JetAtom],
                kinds: Sequence[str] = LOCAL_KINDS) -> Expr:
    if depth <= 0 or rng.random() < 0.25:
        if rng.random() < 0.1:
            return ScalarMul(rng.choice(_SCALARS), Identity())
        return Atom(rng.choice(leaves))
    kind = rng.choice(kinds)
    if kind == "sum":
        return Sum((random_expr(rng, depth - 1, leaves, kinds), random_expr(rng, depth - 1, leaves, kinds)))
    if kind == "prod":
        return Prod((random_expr(rng, depth - 1, leaves, kinds), random_expr(rng, depth - 1, leaves, kinds)))
    if kind == "comm":
        return Comm(random_expr(rng, depth - 1, leaves, kinds), random_expr(rng, depth - 1, leaves, kinds))
    if kind == "scale":
        return ScalarMul(rng.choice(_SCALARS), random_expr(rng, depth - 1, leaves, kinds))
    if kind == "inv_dzbar":
        return InvDzbar(random_expr(rng, depth - 1, leaves, kinds))
    return Deriv(random_expr(rng, depth - 1, leaves, kinds), rng.choice(list(Coordinate)))


def random_corpus(seed: int, size: int, depth: int = 3, x_only: bool = False,
                  context: Optional[RewriteContext] = None, antiderivatives: bool = False) -> list[Expr]:
    """
    ``size`` expressions of depth at most ``depth``; identical for identical
    arguments. ``antiderivatives`` adds IDzb nodes, which the series oracle
    only matches up to zb-independent terms.
    """
    rng = random.Random(f"corpus:{seed}:{depth}:{x_only}")
    leaves = default_leaves(context, x_only=x_only)
    kinds = ALL_KINDS if antiderivatives else LOCAL_KINDS
    return [random_expr(rng, depth, leaves, kinds) for _ in range(size)]
