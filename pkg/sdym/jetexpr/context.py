"""
Rewrite context: the switches and shared state every rewrite consults.

A context is active for the current task through a ``ContextVar``; use
``using_context`` (or ``context_variant``) to scope a different one.
"""
from __future__ import annotations

import logging
import threading
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Callable, Iterator, Optional

from ..algebra import ConstMatrix, LieBasis
from .atoms import JetAtom

if TYPE_CHECKING:
    from .polynomial import Polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NonlocalDefinition:
    """
    A nonlocal atom W with D_zb W = dzbar_def and D_yb W = dybar_def.
    Its value at yb = zb = 0 is taken to be zero.
    """

    name: str
    level: int
    dzbar_def: Polynomial
    dybar_def: Polynomial
    origin: str = ""


class NonlocalRegistry:
    """Append-only, session-wide store of nonlocal atoms W1, W2, ..."""

    def __init__(self):
        self._definitions: dict[str, NonlocalDefinition] = {}
        self._variations: dict[tuple, str] = {}
        self._lock = threading.Lock()

    def register(self, dzbar_def: Polynomial, dybar_def: Polynomial, level: int, origin: str = "") -> JetAtom:
        with self._lock:
            name = f"W{len(self._definitions) + 1}"
            self._definitions[name] = NonlocalDefinition(name, level, dzbar_def, dybar_def, origin)
        logger.debug("Registered nonlocal %s (level %d) %s", name, level, origin)
        return JetAtom.nonlocal_(name)

    def get(self, name: str) -> Optional[NonlocalDefinition]:
        return self._definitions.get(name)

    def __contains__(self, name: str) -> bool:
        return name in self._definitions

    def __len__(self) -> int:
        return len(self._definitions)

    def names(self) -> list[str]:
        return list(self._definitions)

    def variation(self, name: str, key, build: Callable[[NonlocalDefinition], tuple[Polynomial, Polynomial]]) -> JetAtom:
        """
        The nonlocal standing for the variation of ``name`` along ``key``.
        ``build`` maps the definition to the varied (dzbar_def, dybar_def);
        it runs at most once per (name, key).
        """
        memo_key = (name, key)
        existing = self._variations.get(memo_key)
        if existing is not None:
            return JetAtom.nonlocal_(existing)
        definition = self._definitions[name]
        dzbar_def, dybar_def = build(definition)
        atom = self.register(dzbar_def, dybar_def, definition.level, origin=f"variation of {name}")
        with self._lock:
            # a concurrent builder may have won; keep the first one
            winner = self._variations.setdefault(memo_key, atom.name)
        return JetAtom.nonlocal_(winner)


@dataclass(frozen=True)
class RewriteContext:
    """
    psdym:        reduce X jets with joint y/yb orders through the PSDYM equation
    bt:           reduce y/z jets of J through the Backlund relations
    traceless_x:  tr(X) and the traces of its jets vanish
    symmetric:    generic characteristics that satisfy the linearized PSDYM equation
    """

    basis: LieBasis
    psdym: bool = True
    bt: bool = True
    traceless_x: bool = True
    symmetric: frozenset[str] = frozenset()
    registry: NonlocalRegistry = field(default_factory=NonlocalRegistry, compare=False)
    depth_limit: int = 2000
    atom_cache: dict = field(default_factory=dict, init=False, compare=False, repr=False)
    antiderivative_cache: dict = field(default_factory=dict, init=False, compare=False, repr=False)
    frechet_cache: dict = field(default_factory=dict, init=False, compare=False, repr=False)

    def derive(self, **changes) -> RewriteContext:
        """Variant with fresh caches; the nonlocal registry is shared."""
        return replace(self, **changes)

    @property
    def dimension(self) -> int:
        return self.basis.dimension

    def is_known_constant(self, atom: JetAtom) -> bool:
        index = atom.tau_index
        return index is not None and index <= self.basis.dimension

    def constant_value(self, atom: JetAtom) -> ConstMatrix:
        return self.basis.tau(atom.tau_index)


_default_context: Optional[RewriteContext] = None
_default_lock = threading.Lock()
_active: ContextVar[Optional[RewriteContext]] = ContextVar("sdym_rewrite_context", default=None)


def default_context() -> RewriteContext:
    global _default_context
    with _default_lock:
        if _default_context is None:
            _default_context = RewriteContext(basis=LieBasis.sl(2))
        return _default_context


def current_context() -> RewriteContext:
    return _active.get() or default_context()


@contextmanager
def using_context(context: RewriteContext) -> Iterator[RewriteContext]:
    token = _active.set(context)
    try:
        yield context
    finally:
        _active.reset(token)


@contextmanager
def context_variant(**changes) -> Iterator[RewriteContext]:
    with using_context(current_context().derive(**changes)) as context:
        yield context


def fresh_context(n: int = 2, **options) -> RewriteContext:
    """A new context over sl(n) with its own nonlocal registry."""
    return RewriteContext(basis=LieBasis.sl(n), **options)
