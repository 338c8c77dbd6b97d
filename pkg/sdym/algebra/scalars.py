"""
Exact scalars: Gaussian rationals backed by sympy's ``QQ_I`` domain.

Elements of ``QQ_I`` are immutable, hashable and always kept in lowest
terms by the underlying ``QQ`` arithmetic.
"""
import re
from typing import Union

from sympy import QQ, QQ_I

GaussianRational = type(QQ_I.one)

ZERO = QQ_I.zero
ONE = QQ_I.one
I_UNIT = QQ_I(0, 1)

_COMPLEX_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)?\s*i)?\s*$"
)


def rational(numerator: int, denominator: int = 1) -> GaussianRational:
    """Real Gaussian rational numerator/denominator."""
    return QQ_I(QQ(numerator, denominator), 0)


def gaussian(re_part: Union[int, GaussianRational] = 0, im_part: int = 0) -> GaussianRational:
    if isinstance(re_part, GaussianRational):
        return re_part
    return QQ_I(re_part, im_part)


def as_gaussian(value) -> GaussianRational:
    """Coerce ints, QQ elements and Gaussian rationals to ``QQ_I``."""
    if isinstance(value, GaussianRational):
        return value
    return QQ_I.convert(value)


def is_zero(value: GaussianRational) -> bool:
    # QQ_I.__eq__ returns NotImplemented against ints, so never compare with 0
    return not value


def _format_rational(value) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_gaussian(value: GaussianRational) -> str:
    """Serialize as "a", "bi" or "a+bi" with exact "num/den" parts."""
    re_part, im_part = value.x, value.y
    if not im_part:
        return _format_rational(re_part)
    sign = "-" if im_part < 0 else "+"
    magnitude = _format_rational(abs(im_part))
    if not re_part:
        return f"{'-' if sign == '-' else ''}{magnitude}i"
    return f"{_format_rational(re_part)}{sign}{magnitude}i"


def _parse_rational(text: str):
    if "/" in text:
        numerator, denominator = text.split("/")
        return QQ(int(numerator), int(denominator))
    return QQ(int(text))


def parse_gaussian(text: str) -> GaussianRational:
    """Inverse of :func:`format_gaussian`."""
    text = text.strip()
    if text.endswith("i") and not any(c in text[1:] for c in "+-"):
        body = text[:-1]
        negative = body.startswith("-")
        body = body.lstrip("+-") or "1"
        im_part = _parse_rational(body)
        return QQ_I(0, -im_part if negative else im_part)
    match = _COMPLEX_RE.match(text)
    if not match or (match.group("re") is None and match.group("sign") is None):
        raise ValueError(f"Invalid Gaussian rational: {text!r}")
    re_part = _parse_rational(match.group("re")) if match.group("re") else QQ(0)
    im_part = QQ(0)
    if match.group("sign"):
        im_part = _parse_rational(match.group("im")) if match.group("im") else QQ(1)
        if match.group("sign") == "-":
            im_part = -im_part
    return QQ_I(re_part, im_part)


def magnitude(value: GaussianRational):
    """|re| + |im|, an exact size indicator."""
    return abs(value.x) + abs(value.y)
