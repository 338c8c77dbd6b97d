from __future__ import annotations

from typing import Iterable, Mapping, Optional

from ..algebra.scalars import GaussianRational, ONE, as_gaussian
from .atoms import Coordinate, Factor, JetAtom, Monomial, TraceAtom, Word, unit_jet
from .context import RewriteContext, current_context
from .expr import Expr, _is_scalar
from .words import normalize_word


class Polynomial(Expr):
    """
    Normal form: a finite sum of monomials with nonzero Gaussian rational
    coefficients. Immutable; hashable; equality is term-wise.
    """

    def __init__(self, terms: Optional[Mapping[Monomial, GaussianRational]] = None):
        self.terms: dict[Monomial, GaussianRational] = {m: c for m, c in (terms or {}).items() if c}
        self._hash: Optional[int] = None

    # constructors

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def identity(cls, coefficient=ONE) -> Polynomial:
        return cls({Monomial(): as_gaussian(coefficient)})

    @classmethod
    def of_atom(cls, atom: JetAtom) -> Polynomial:
        """Single-atom word; the caller guarantees the atom is already reduced."""
        return cls({Monomial(word=(atom,)): ONE})

    @classmethod
    def of_word(cls, word: Word, coefficient=ONE) -> Polynomial:
        return cls({Monomial(word=word): as_gaussian(coefficient)})

    @classmethod
    def of_coordinate(cls, coordinate: Coordinate, power: int = 1) -> Polynomial:
        return cls({Monomial(coords=tuple(power * e for e in unit_jet(coordinate))): ONE})

    @classmethod
    def of_trace(cls, trace_atom: TraceAtom) -> Polynomial:
        return cls({Monomial(traces=(trace_atom,)): ONE})

    @classmethod
    def from_monomial(cls, monomial: Monomial, coefficient=ONE) -> Polynomial:
        return cls({monomial: as_gaussian(coefficient)})

    @classmethod
    def from_factors(cls, scalar: Monomial, factors: Iterable[Factor], coefficient=ONE,
                     context: Optional[RewriteContext] = None) -> Polynomial:
        """scalar part times the normalized product of reduced factors."""
        context = context or current_context()
        coefficient = as_gaussian(coefficient)
        terms = {}
        for word, value in normalize_word(factors, context).items():
            _accumulate(terms, scalar.with_word(word), coefficient * value)
        return cls(terms)

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> list[tuple[Monomial, GaussianRational]]:
        """Terms in the deterministic monomial order."""
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def monomials(self) -> list[Monomial]:
        return [monomial for monomial, _ in self.items()]

    def atoms(self) -> set[JetAtom]:
        return {atom for monomial in self.terms for atom in monomial.atoms()}

    def sort_key(self) -> tuple:
        return tuple((m.sort_key(), c.x, c.y) for m, c in self.items())

    def restrict(self, monomials) -> Polynomial:
        return Polynomial({m: c for m, c in self.terms.items() if m in monomials})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from .printer import to_text
        return f"Polynomial({to_text(self)!r})"

    def __str__(self) -> str:
        from .printer import to_text
        return to_text(self)

    # arithmetic; mixed with tree nodes it falls back to building a tree

    def __add__(self, other):
        if isinstance(other, Polynomial):
            terms = dict(self.terms)
            for monomial, coefficient in other.terms.items():
                _accumulate(terms, monomial, coefficient)
            return Polynomial(terms)
        if _is_scalar(other):
            return self + Polynomial.identity(other)
        return super().__add__(other)

    def __radd__(self, other):
        if _is_scalar(other):
            return Polynomial.identity(other) + self
        return super().__radd__(other)

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            return self + (-other)
        if _is_scalar(other):
            return self + Polynomial.identity(-as_gaussian(other))
        return super().__sub__(other)

    def __rsub__(self, other):
        if _is_scalar(other):
            return Polynomial.identity(other) + (-self)
        return super().__rsub__(other)

    def scale(self, factor) -> Polynomial:
        factor = as_gaussian(factor)
        if not factor:
            return Polynomial()
        return Polynomial({m: factor * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return super().__mul__(other)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return super().__rmul__(other)


def _accumulate(terms: dict, monomial: Monomial, coefficient: GaussianRational) -> None:
    value = terms.get(monomial)
    value = coefficient if value is None else value + coefficient
    if value:
        terms[monomial] = value
    else:
        terms.pop(monomial, None)


def multiply(left: Polynomial, right: Polynomial, context: Optional[RewriteContext] = None) -> Polynomial:
    context = context or current_context()
    terms: dict[Monomial, GaussianRational] = {}
    for m1, c1 in left.terms.items():
        for m2, c2 in right.terms.items():
            scalar = m1.scalar_part().times_scalar(m2)
            for word, value in normalize_word(m1.word + m2.word, context).items():
                _accumulate(terms, scalar.with_word(word), c1 * c2 * value)
    return Polynomial(terms)


def product(factors: Iterable[Polynomial], context: Optional[RewriteContext] = None) -> Polynomial:
    result = Polynomial.identity()
    for factor in factors:
        result = multiply(result, factor, context)
        if not result:
            break
    return result


def commutator(left: Polynomial, right: Polynomial, context: Optional[RewriteContext] = None) -> Polynomial:
    return multiply(left, right, context) - multiply(right, left, context)


def add_all(polynomials: Iterable[Polynomial]) -> Polynomial:
    terms: dict[Monomial, GaussianRational] = {}
    for polynomial in polynomials:
        for monomial, coefficient in polynomial.terms.items():
            _accumulate(terms, monomial, coefficient)
    return Polynomial(terms)


ZERO_POLY = Polynomial()
IDENTITY_POLY = Polynomial.identity()
