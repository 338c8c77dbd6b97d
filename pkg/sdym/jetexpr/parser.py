"""
Recursive-descent parser for the expression language.

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := ('-' | '+') unary | primary
    primary := NUMBER ['/' NUMBER] | 'i' | NAME [jet] | FUNC '(' expr ')'
             | 'comm' '(' expr ',' expr ')' | '(' expr ')'
    jet     := '_' ('yb' | 'zb' | 'y' | 'z')+
"""
from __future__ import annotations

import re
from typing import NamedTuple, Optional

from ..algebra.scalars import I_UNIT, rational
from ..exceptions import ParseError, UnknownIdentifierError
from .atoms import Coordinate, JetAtom, NO_JET
from .context import RewriteContext, current_context
from .expr import Atom, Comm, Coord, Deriv, Expr, Identity, InvDzbar, Prod, ScalarMul, Sum, Trace

_TOKEN_RE = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9]*(?:_[A-Za-z]*)?)
  | (?P<op>[-+*/(),])
""", re.VERBOSE)

_JET_RE = re.compile(r"yb|zb|y|z")

_DERIVATIVES = {"Dy": Coordinate.Y, "Dz": Coordinate.Z, "Dyb": Coordinate.YB, "Dzb": Coordinate.ZB}
_FUNCTIONS = set(_DERIVATIVES) | {"IDzb", "comm", "tr"}
_COORDINATES = {"y": Coordinate.Y, "z": Coordinate.Z, "yb": Coordinate.YB, "zb": Coordinate.ZB}
_NUMBERED = re.compile(r"^(tau|W|P)(\d+)$")


class Token(NamedTuple):
    kind: str
    text: str
    where: tuple[int, int]


def tokenize(text: str) -> list[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if not match:
            raise ParseError(text, (position, position + 1), f"unexpected character {text[position]!r}")
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), match.span()))
        position = match.end()
    tokens.append(Token("end", "", (len(text), len(text))))
    return tokens


def _is_literal(expr: Expr) -> bool:
    return isinstance(expr, ScalarMul) and isinstance(expr.expr, Identity)


class Parser:
    def __init__(self, text: str, context: Optional[RewriteContext] = None):
        self.text = text
        self.context = context or current_context()
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        return ParseError(self.text, token.where, message)

    def _expect(self, text: str) -> Token:
        if self.current.text != text:
            found = self.current.text or "end of input"
            raise self._error(f"expected {text!r}, found {found!r}")
        return self._advance()

    def parse(self) -> Expr:
        if self.current.kind == "end":
            raise self._error("empty expression")
        expr = self._expr()
        if self.current.kind != "end":
            raise self._error(f"unexpected {self.current.text!r}")
        return expr

    def _expr(self) -> Expr:
        terms = [self._term()]
        while self.current.text in ("+", "-"):
            sign = self._advance().text
            term = self._term()
            terms.append(term if sign == "+" else _negate(term))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def _term(self) -> Expr:
        factors = [self._unary()]
        while self.current.text == "*":
            self._advance()
            factor = self._unary()
            previous = factors[-1]
            if _is_literal(previous) and _is_literal(factor):
                factors[-1] = ScalarMul(previous.scalar * factor.scalar, Identity())
            else:
                factors.append(factor)
        if len(factors) == 1:
            return factors[0]
        if _is_literal(factors[0]):
            rest = factors[1:]
            return ScalarMul(factors[0].scalar, rest[0] if len(rest) == 1 else Prod(tuple(rest)))
        return Prod(tuple(factors))

    def _unary(self) -> Expr:
        if self.current.text == "-":
            self._advance()
            return _negate(self._unary())
        if self.current.text == "+":
            self._advance()
            return self._unary()
        return self._primary()

    def _primary(self) -> Expr:
        token = self.current
        if token.kind == "number":
            self._advance()
            value = rational(int(token.text))
            if self.current.text == "/":
                self._advance()
                denominator = self.current
                if denominator.kind != "number":
                    raise self._error("expected an integer denominator")
                self._advance()
                if int(denominator.text) == 0:
                    raise self._error("division by zero", denominator)
                value = rational(int(token.text), int(denominator.text))
            return ScalarMul(value, Identity())
        if token.text == "(":
            self._advance()
            expr = self._expr()
            self._expect(")")
            return expr
        if token.kind == "name":
            return self._name()
        raise self._error(f"unexpected {token.text or 'end of input'!r}")

    def _name(self) -> Expr:
        token = self._advance()
        name, _, suffix = token.text.partition("_")
        has_jet = "_" in token.text

        if name in _FUNCTIONS and not has_jet:
            return self._call(name, token)
        if name == "i" and not has_jet:
            return ScalarMul(I_UNIT, Identity())

        jet = self._jet(suffix, token) if has_jet else NO_JET

        if name in _COORDINATES or name == "I":
            if has_jet:
                raise self._error(f"{name} takes no derivatives", token)
            return Identity() if name == "I" else Coord(_COORDINATES[name])
        atom = self._atom(name, jet, token)
        return Atom(atom)

    def _jet(self, suffix: str, token: Token) -> tuple[int, int, int, int]:
        orders = [0, 0, 0, 0]
        position = 0
        while position < len(suffix):
            match = _JET_RE.match(suffix, position)
            if not match:
                raise self._error(f"invalid derivative suffix {suffix!r}", token)
            orders[Coordinate.from_token(match.group())] += 1
            position = match.end()
        if not suffix:
            raise self._error("empty derivative suffix", token)
        return tuple(orders)

    def _atom(self, name: str, jet, token: Token) -> JetAtom:
        if name == "J":
            return JetAtom.j(jet)
        if name == "Jinv":
            return JetAtom.jinv(jet)
        if name == "X":
            return JetAtom.x(jet)
        if name == "M":
            return JetAtom.const("M").with_jet(jet)
        if name in ("Q", "Phi"):
            return JetAtom.generic(name, jet)
        numbered = _NUMBERED.match(name)
        if numbered:
            prefix, number = numbered.group(1), int(numbered.group(2))
            if prefix == "tau":
                if not 1 <= number <= self.context.dimension:
                    raise UnknownIdentifierError(
                        self.text, token.where,
                        f"tau{number} is outside tau1..tau{self.context.dimension}",
                    )
                return JetAtom.tau(number).with_jet(jet)
            if prefix == "W":
                return JetAtom.nonlocal_(name, jet)
            return JetAtom.generic(name, jet)
        raise UnknownIdentifierError(self.text, token.where, f"unknown identifier {name!r}")

    def _call(self, name: str, token: Token) -> Expr:
        if self.current.text != "(":
            raise self._error(f"{name} must be called", token)
        self._advance()
        first = self._expr()
        if name == "comm":
            self._expect(",")
            second = self._expr()
            self._expect(")")
            return Comm(first, second)
        self._expect(")")
        if name == "IDzb":
            return InvDzbar(first)
        if name == "tr":
            return Trace(first)
        return Deriv(first, _DERIVATIVES[name])


def _negate(expr: Expr) -> Expr:
    if isinstance(expr, ScalarMul):
        return ScalarMul(-expr.scalar, expr.expr)
    return ScalarMul(rational(-1), expr)


def parse(text: str, context: Optional[RewriteContext] = None) -> Expr:
    """Parse one expression; raises ParseError / UnknownIdentifierError with a position."""
    return Parser(text, context).parse()
