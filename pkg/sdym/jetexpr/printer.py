"""Text and LaTeX printers. The text printer emits the parser's grammar."""
from __future__ import annotations

from ..algebra.scalars import GaussianRational
from .atoms import Coordinate, InvFactor, JetAtom, Monomial
from .expr import Atom, Comm, Coord, Deriv, Expr, Identity, InvDzbar, Prod, ScalarMul, Sum, Trace, Zero

_DERIVATIVE_NAMES = {Coordinate.Y: "Dy", Coordinate.Z: "Dz", Coordinate.YB: "Dyb", Coordinate.ZB: "Dzb"}


def _rational_text(value) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _is_negative_real(value: GaussianRational) -> bool:
    return not value.y and value.x < 0


def _coefficient_text(value: GaussianRational) -> str:
    """Multiplicative prefix for a coefficient that is not a negative real."""
    if not value.y:
        return _rational_text(value.x)
    imaginary = "i" if value.y == 1 else f"{_rational_text(value.y)}*i"
    if not value.x:
        return imaginary if value.y > 0 else f"(-{_rational_text(-value.y)}*i)"
    sign = "+" if value.y > 0 else "-"
    magnitude = abs(value.y)
    imaginary = "i" if magnitude == 1 else f"{_rational_text(magnitude)}*i"
    return f"({_rational_text(value.x)}{sign}{imaginary})"


def _factor_text(factor) -> str:
    if isinstance(factor, JetAtom):
        return str(factor)
    return f"IDzb({to_text(factor.content)})"


def monomial_text(monomial: Monomial) -> str:
    pieces = []
    for coordinate in Coordinate:
        pieces.extend([coordinate.token] * monomial.coords[coordinate])
    for trace_atom in monomial.traces:
        pieces.append("tr(" + "*".join(_factor_text(f) for f in trace_atom.word) + ")")
    pieces.extend(_factor_text(f) for f in monomial.word)
    return "*".join(pieces) if pieces else "I"


def _term_text(monomial: Monomial, coefficient: GaussianRational) -> str:
    body = monomial_text(monomial)
    if not coefficient.y and coefficient.x == 1:
        return body
    prefix = _coefficient_text(coefficient)
    if body == "I":
        return prefix
    return f"{prefix}*{body}"


def _polynomial_text(polynomial) -> str:
    items = polynomial.items()
    if not items:
        return "0"
    parts = []
    for position, (monomial, coefficient) in enumerate(items):
        negative = _is_negative_real(coefficient)
        text = _term_text(monomial, -coefficient if negative else coefficient)
        if position == 0:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f" - {text}" if negative else f" + {text}")
    return "".join(parts)


def to_text(expr: Expr) -> str:
    from .polynomial import Polynomial

    if isinstance(expr, Polynomial):
        return _polynomial_text(expr)
    if isinstance(expr, Zero):
        return "0"
    if isinstance(expr, Identity):
        return "I"
    if isinstance(expr, Atom):
        return str(expr.atom)
    if isinstance(expr, Coord):
        return expr.coordinate.token
    if isinstance(expr, Sum):
        return "(" + " + ".join(to_text(term) for term in expr.terms) + ")"
    if isinstance(expr, ScalarMul):
        if _is_negative_real(expr.scalar):
            return f"-({_coefficient_text(-expr.scalar)}*{to_text(expr.expr)})"
        return f"{_coefficient_text(expr.scalar)}*{to_text(expr.expr)}"
    if isinstance(expr, Prod):
        return "*".join(to_text(factor) for factor in expr.factors)
    if isinstance(expr, Comm):
        return f"comm({to_text(expr.left)}, {to_text(expr.right)})"
    if isinstance(expr, InvDzbar):
        return f"IDzb({to_text(expr.expr)})"
    if isinstance(expr, Deriv):
        return f"{_DERIVATIVE_NAMES[expr.coordinate]}({to_text(expr.expr)})"
    if isinstance(expr, Trace):
        return f"tr({to_text(expr.expr)})"
    raise TypeError(f"Cannot print {type(expr).__name__}")


# LaTeX

def _atom_latex(atom: JetAtom) -> str:
    if atom.tau_index is not None:
        base = rf"\tau_{{{atom.tau_index}}}"
    elif atom.name == "Jinv":
        base = "J^{-1}"
    elif atom.name.startswith("W") and atom.name[1:].isdigit():
        base = rf"W_{{{atom.name[1:]}}}"
    elif atom.name == "Phi":
        base = r"\Phi"
    else:
        base = atom.name
    if atom.is_underived:
        return base
    suffix = "".join(c.latex * atom.jet[c] for c in Coordinate)
    if "^" in base:
        return f"({base})_{{{suffix}}}"
    if "_" in base:
        return rf"{base}{{}}_{{{suffix}}}"
    return f"{base}_{{{suffix}}}"


def _factor_latex(factor) -> str:
    if isinstance(factor, JetAtom):
        return _atom_latex(factor)
    if isinstance(factor, InvFactor):
        return rf"\partial_{{\bar{{z}}}}^{{-1}}\left({to_latex(factor.content)}\right)"
    raise TypeError(f"Cannot print {type(factor).__name__}")


def _coefficient_latex(value: GaussianRational) -> str:
    def rational_latex(q) -> str:
        if q.denominator == 1:
            return str(q.numerator)
        return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"

    if not value.y:
        return rational_latex(value.x)
    imaginary = "i" if value.y == 1 else f"{rational_latex(value.y)} i"
    if not value.x:
        return imaginary
    return rf"\left({rational_latex(value.x)} + {imaginary}\right)"


def to_latex(polynomial) -> str:
    items = polynomial.items()
    if not items:
        return "0"
    parts = []
    for position, (monomial, coefficient) in enumerate(items):
        negative = _is_negative_real(coefficient)
        if negative:
            coefficient = -coefficient
        pieces = []
        for coordinate in Coordinate:
            power = monomial.coords[coordinate]
            if power:
                pieces.append(coordinate.latex + (f"^{{{power}}}" if power > 1 else ""))
        for trace_atom in monomial.traces:
            pieces.append(r"\operatorname{tr}\left(" + " ".join(_factor_latex(f) for f in trace_atom.word) + r"\right)")
        pieces.extend(_factor_latex(f) for f in monomial.word)
        body = " ".join(pieces)
        if coefficient.y or coefficient.x != 1:
            body = f"{_coefficient_latex(coefficient)} {body}".strip()
        elif not body:
            body = "1"
        if position == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)
