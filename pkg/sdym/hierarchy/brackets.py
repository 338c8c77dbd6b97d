"""
Commutators of hierarchy symmetries and the Kac-Moody / Virasoro checks.

Symbolic mode compares exactly and, when nonlocal atoms are involved, in
the covering. Oracle mode hands the difference to a callable that
evaluates it on solution fixtures.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from ..algebra.scalars import GaussianRational, as_gaussian
from ..exceptions import LevelCapExceededError, LevelOutOfRangeError
from ..frechet import Characteristic, frechet
from ..jetexpr import JetAtom, Polynomial, RewriteContext, add_all, current_context, multiply, reduce_atom
from ..recursion import equal_in_covering, iso_I
from ..series.oracle import OracleVerdict
from .generator import HierarchyCatalog, HierarchyEntry
from .operators import SymmetryOperator
from .structure import BASE_SIZE, StructureTable, base_structure_table

logger = logging.getLogger(__name__)

SYMBOLIC_CAP = 2
ORACLE_CAP = 3


Oracle = Callable[[Polynomial], OracleVerdict]


@dataclass(frozen=True)
class VerificationOutcome:
    passed: bool
    mode: str
    witness: Optional[str] = None


def bracket(a: HierarchyEntry, b: HierarchyEntry, context: Optional[RewriteContext] = None) -> Polynomial:
    """[Delta_a, Delta_b] X = Delta_a Phi_b - Delta_b Phi_a."""
    context = context or current_context()
    return frechet(b.phi, a.characteristic(), context) - frechet(a.phi, b.characteristic(), context)


def _judge(difference: Polynomial, mode: str, context: RewriteContext,
           oracle: Optional[Oracle]) -> VerificationOutcome:
    if mode == "symbolic":
        passed = difference.is_zero() or equal_in_covering(difference, Polynomial(), context)
        witness = None if passed else f"residual has {len(difference)} terms"
        return VerificationOutcome(passed, mode, witness)
    if oracle is None:
        raise ValueError("Oracle mode needs an oracle")
    verdict = oracle(difference)
    return VerificationOutcome(verdict.passed, mode, verdict.witness)


def _check_cap(m: int, n: int, mode: str, cap: Optional[int]) -> None:
    if m < 0 or n < 0:
        raise LevelOutOfRangeError(f"Levels must be >= 0, got ({m}, {n})")
    limit = cap if cap is not None else (SYMBOLIC_CAP if mode == "symbolic" else ORACLE_CAP)
    if m + n > limit:
        raise LevelCapExceededError(f"m + n = {m + n} exceeds the {mode} cap {limit}")


def _combination(terms: list[tuple[GaussianRational, HierarchyEntry]]) -> Polynomial:
    return add_all(entry.phi.scale(coefficient) for coefficient, entry in terms if coefficient)


def verify_kac_moody(family: str, i: int, j: int, m: int, n: int, mode: str = "symbolic",
                     catalog: Optional[HierarchyCatalog] = None, oracle: Optional[Oracle] = None,
                     cap: Optional[int] = None, table: Optional[StructureTable] = None,
                     context: Optional[RewriteContext] = None) -> VerificationOutcome:
    """
    internal: [Delta_i^(m), Delta_j^(n)] X = C_ij^k Delta_k^(m+n) X over tau_1..tau_d
    base:     [Delta_i^(m), Delta_j^(n)] X = f_ij^k Delta_k^(m+n) X over L1..L5
    """
    _check_cap(m, n, mode, cap)
    context = context or (catalog.context if catalog else current_context())
    catalog = catalog or HierarchyCatalog(context)

    if family == "internal":
        size = context.dimension
        operator = lambda k: SymmetryOperator("internal", k)
        constant = lambda k: context.basis.constant(i, j, k)
    elif family == "base":
        size = BASE_SIZE
        table = table or base_structure_table(context)
        operator = lambda k: SymmetryOperator("L", k)
        constant = lambda k: table.constant(i, j, k)
    else:
        raise ValueError(f"Unknown family {family!r}")
    if not (1 <= i <= size and 1 <= j <= size):
        raise LevelOutOfRangeError(f"Indices ({i}, {j}) outside 1..{size}")

    left = bracket(catalog.entry(operator(i), m), catalog.entry(operator(j), n), context)
    predicted = _combination([
        (constant(k), catalog.entry(operator(k), m + n))
        for k in range(1, size + 1) if constant(k)
    ])
    outcome = _judge(left - predicted, mode, context, oracle)
    logger.debug("Kac-Moody %s (%d,%d) levels (%d,%d): %s", family, i, j, m, n, outcome.passed)
    return outcome


def verify_virasoro(which: int, m: int, n: int, mode: str = "symbolic",
                    catalog: Optional[HierarchyCatalog] = None, oracle: Optional[Oracle] = None,
                    cap: Optional[int] = None, context: Optional[RewriteContext] = None) -> VerificationOutcome:
    """[Delta^(m), Delta^(n)] X = -(m - n) Delta^(m+n) X for the L6 or L7 hierarchy."""
    if which not in (6, 7):
        raise LevelOutOfRangeError(f"Virasoro hierarchies come from L6 or L7, not L{which}")
    _check_cap(m, n, mode, cap)
    context = context or (catalog.context if catalog else current_context())
    catalog = catalog or HierarchyCatalog(context)
    operator = SymmetryOperator("L", which)

    left = bracket(catalog.entry(operator, m), catalog.entry(operator, n), context)
    predicted = catalog.entry(operator, m + n).phi.scale(as_gaussian(n - m))
    return _judge(left - predicted, mode, context, oracle)


def sdym_bracket_residual(i: int, j: int, context: Optional[RewriteContext] = None) -> Polynomial:
    """[Delta_i, Delta_j] J - C_ij^k J tau_k at level zero."""
    context = context or current_context()
    a, b = SymmetryOperator("internal", i), SymmetryOperator("internal", j)
    ch_a = Characteristic(q=a.q_seed(context), phi=a.seed(context), name=a.label)
    ch_b = Characteristic(q=b.q_seed(context), phi=b.seed(context), name=b.label)
    left = frechet(ch_b.q, ch_a, context) - frechet(ch_a.q, ch_b, context)
    j_atom = reduce_atom(JetAtom.j(), context)
    predicted = add_all(
        multiply(j_atom, reduce_atom(JetAtom.tau(k), context), context).scale(context.basis.constant(i, j, k))
        for k in range(1, context.dimension + 1)
        if context.basis.constant(i, j, k)
    )
    return left - predicted


def verify_sdym_kac_moody(i: int, j: int, mode: str = "symbolic", oracle: Optional[Oracle] = None,
                          context: Optional[RewriteContext] = None) -> VerificationOutcome:
    context = context or current_context()
    return _judge(sdym_bracket_residual(i, j, context), mode, context, oracle)


def hierarchy_coherence(operator: SymmetryOperator, level: int, catalog: HierarchyCatalog,
                        mode: str = "symbolic", oracle: Optional[Oracle] = None) -> VerificationOutcome:
    """I{T^n Q^(0)} against R^n Phi^(0) for an I-catalogued seed."""
    context = catalog.context
    entry = catalog.entry(operator, level)
    if entry.q is None:
        raise ValueError(f"{operator.label} has no catalogued SDYM seed")
    return _judge(iso_I(entry.q, context) - entry.phi, mode, context, oracle)
