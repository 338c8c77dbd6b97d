"""
Building blocks of normal forms: coordinates, jet atoms, opaque
antiderivative factors, formal trace atoms and monomials.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import IntEnum
from typing import TYPE_CHECKING, Union

if TYPE_CHECKING:
    from .polynomial import Polynomial

Jet = tuple[int, int, int, int]
NO_JET: Jet = (0, 0, 0, 0)

_NAME_RE = re.compile(r"^([A-Za-z]+)(\d*)$")


class Coordinate(IntEnum):
    Y = 0
    Z = 1
    YB = 2
    ZB = 3

    @property
    def token(self) -> str:
        return ("y", "z", "yb", "zb")[self]

    @property
    def latex(self) -> str:
        return ("y", "z", r"\bar{y}", r"\bar{z}")[self]

    @classmethod
    def from_token(cls, token: str) -> Coordinate:
        return cls(("y", "z", "yb", "zb").index(token))


def unit_jet(coordinate: Coordinate) -> Jet:
    jet = [0, 0, 0, 0]
    jet[coordinate] = 1
    return tuple(jet)


def add_jets(a: Jet, b: Jet) -> Jet:
    return tuple(x + y for x, y in zip(a, b))


def sub_jets(a: Jet, b: Jet) -> Jet:
    return tuple(x - y for x, y in zip(a, b))


class AtomKind(IntEnum):
    """Atom kinds, in monomial ordering rank."""

    CONST = 0
    J = 1
    JINV = 2
    X = 3
    GENERIC = 4
    NONLOCAL = 5


def _name_key(name: str) -> tuple[str, int]:
    # natural order so tau10 sorts after tau9
    match = _NAME_RE.match(name)
    if not match:
        return name, -1
    return match.group(1), int(match.group(2)) if match.group(2) else -1


@dataclass(frozen=True)
class JetAtom:
    kind: AtomKind
    name: str
    jet: Jet = NO_JET

    @classmethod
    def j(cls, jet: Jet = NO_JET) -> JetAtom:
        return cls(AtomKind.J, "J", jet)

    @classmethod
    def jinv(cls, jet: Jet = NO_JET) -> JetAtom:
        return cls(AtomKind.JINV, "Jinv", jet)

    @classmethod
    def x(cls, jet: Jet = NO_JET) -> JetAtom:
        return cls(AtomKind.X, "X", jet)

    @classmethod
    def const(cls, name: str) -> JetAtom:
        return cls(AtomKind.CONST, name)

    @classmethod
    def tau(cls, k: int) -> JetAtom:
        return cls(AtomKind.CONST, f"tau{k}")

    @classmethod
    def generic(cls, name: str, jet: Jet = NO_JET) -> JetAtom:
        return cls(AtomKind.GENERIC, name, jet)

    @classmethod
    def nonlocal_(cls, name: str, jet: Jet = NO_JET) -> JetAtom:
        return cls(AtomKind.NONLOCAL, name, jet)

    def with_jet(self, jet: Jet) -> JetAtom:
        return JetAtom(self.kind, self.name, jet)

    def derived(self, coordinate: Coordinate) -> JetAtom:
        return self.with_jet(add_jets(self.jet, unit_jet(coordinate)))

    def order(self, coordinate: Coordinate) -> int:
        return self.jet[coordinate]

    @property
    def is_underived(self) -> bool:
        return not any(self.jet)

    @property
    def tau_index(self) -> int | None:
        if self.kind != AtomKind.CONST:
            return None
        prefix, number = _name_key(self.name)
        return number if prefix == "tau" and number > 0 else None

    def sort_key(self) -> tuple:
        return 0, int(self.kind), _name_key(self.name), self.jet

    def __str__(self) -> str:
        if self.is_underived:
            return self.name
        suffix = "".join(c.token * self.jet[c] for c in Coordinate)
        return f"{self.name}_{suffix}"


@dataclass(frozen=True)
class InvFactor:
    """Opaque D_zb^-1 of a normal form that has no exact antiderivative."""

    content: Polynomial

    def sort_key(self) -> tuple:
        return 1, self.content.sort_key()


Factor = Union[JetAtom, InvFactor]
Word = tuple[Factor, ...]


@dataclass(frozen=True)
class TraceAtom:
    """Formal scalar tr(word); the word is its minimal cyclic rotation."""

    word: Word

    def sort_key(self) -> tuple:
        return tuple(factor.sort_key() for factor in self.word)


def canonical_rotation(word: Word) -> Word:
    rotations = [word[i:] + word[:i] for i in range(len(word))]
    return min(rotations, key=lambda w: tuple(f.sort_key() for f in w))


@dataclass(frozen=True)
class Monomial:
    """
    coords:  commuting coordinate powers (y, z, yb, zb)
    traces:  commuting formal trace atoms, sorted
    word:    ordered noncommutative factors; empty means the identity matrix
    """

    coords: Jet = NO_JET
    traces: tuple[TraceAtom, ...] = ()
    word: Word = ()
    _key: tuple = field(default=None, init=False, repr=False, compare=False, hash=False)

    @property
    def degree(self) -> int:
        return sum(self.coords) + len(self.traces) + len(self.word)

    def sort_key(self) -> tuple:
        key = self._key
        if key is None:
            key = (
                self.degree,
                tuple(factor.sort_key() for factor in self.word),
                tuple(t.sort_key() for t in self.traces),
                self.coords,
            )
            object.__setattr__(self, "_key", key)
        return key

    @property
    def is_scalar(self) -> bool:
        return not self.word

    def scalar_part(self) -> Monomial:
        return Monomial(self.coords, self.traces, ())

    def with_word(self, word: Word) -> Monomial:
        return Monomial(self.coords, self.traces, word)

    def times_scalar(self, other: Monomial) -> Monomial:
        """Multiply by the scalar part of another monomial (coords and traces commute)."""
        traces = tuple(sorted(self.traces + other.traces, key=lambda t: t.sort_key()))
        return Monomial(add_jets(self.coords, other.coords), traces, self.word)

    def atoms(self):
        """Every jet atom reachable from this monomial, including inside traces and opaque factors."""
        for trace_atom in self.traces:
            yield from _word_atoms(trace_atom.word)
        yield from _word_atoms(self.word)


def _word_atoms(word: Word):
    for factor in word:
        if isinstance(factor, JetAtom):
            yield factor
        else:
            for monomial in factor.content.terms:
                yield from monomial.atoms()
