"""Normal form of noncommutative words of already-reduced factors."""
from __future__ import annotations

from typing import Iterable, Iterator

from ..algebra.scalars import GaussianRational, ONE
from .atoms import AtomKind, Factor, JetAtom, Word
from .context import RewriteContext


def cancels(left: Factor, right: Factor) -> bool:
    """J Jinv = Jinv J = I for undifferentiated J."""
    return (
        isinstance(left, JetAtom) and isinstance(right, JetAtom)
        and left.is_underived and right.is_underived
        and {left.kind, right.kind} == {AtomKind.J, AtomKind.JINV}
    )


def _folds(left: Factor, right: Factor, context: RewriteContext) -> bool:
    return (
        isinstance(left, JetAtom) and isinstance(right, JetAtom)
        and context.is_known_constant(left) and context.is_known_constant(right)
    )


def _fold(left: JetAtom, right: JetAtom, context: RewriteContext) -> Iterator[tuple[Word, GaussianRational]]:
    """tau_a tau_b re-expanded over {I, tau_1..tau_d}."""
    identity_part, tau_parts = context.basis.expand(context.constant_value(left) * context.constant_value(right))
    if identity_part:
        yield (), identity_part
    for k, coefficient in enumerate(tau_parts, start=1):
        if coefficient:
            yield (JetAtom.tau(k),), coefficient


def _push(stack: Word, factor: Factor, context: RewriteContext) -> Iterator[tuple[Word, GaussianRational]]:
    if stack:
        top = stack[-1]
        if cancels(top, factor):
            yield stack[:-1], ONE
            return
        if _folds(top, factor, context):
            base = stack[:-1]
            for tail, coefficient in _fold(top, factor, context):
                yield base + tail, coefficient
            return
    yield stack + (factor,), ONE


def normalize_word(factors: Iterable[Factor], context: RewriteContext) -> dict[Word, GaussianRational]:
    """
    Left-to-right stack reduction. Adjacent J/Jinv pairs cancel and adjacent
    basis constants fold, so the result may branch into several words.
    """
    stacks: dict[Word, GaussianRational] = {(): ONE}
    for factor in factors:
        following: dict[Word, GaussianRational] = {}
        for stack, coefficient in stacks.items():
            for word, factor_coefficient in _push(stack, factor, context):
                value = following.get(word)
                product = coefficient * factor_coefficient
                following[word] = product if value is None else value + product
        stacks = {word: value for word, value in following.items() if value}
        if not stacks:
            break
    return stacks
