from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..exceptions import MissingCharacteristicError
from ..jetexpr import Expr, Polynomial, as_poly, parse

Source = Union[Expr, str, None]


def _coerce(value: Source) -> Optional[Polynomial]:
    if value is None:
        return None
    if isinstance(value, str):
        value = parse(value)
    return as_poly(value)


@dataclass(frozen=True)
class Characteristic:
    """
    The vertical field V = Q d/dJ + Phi d/dX, i.e. Delta J = Q and Delta X = Phi.
    Either side may be absent; consistency of a (Q, Phi) pair is not checked
    here, see ``bt17_residuals``.
    """

    q: Optional[Polynomial] = None
    phi: Optional[Polynomial] = None
    name: str = "V"

    def __post_init__(self):
        if self.q is None and self.phi is None:
            raise MissingCharacteristicError(f"Characteristic {self.name} needs Q or Phi")

    @classmethod
    def of(cls, q: Source = None, phi: Source = None, name: str = "V") -> Characteristic:
        """Build from expressions or source text."""
        return cls(_coerce(q), _coerce(phi), name)

    def require_q(self) -> Polynomial:
        if self.q is None:
            raise MissingCharacteristicError(f"Characteristic {self.name} has no Q but J appears")
        return self.q

    def require_phi(self) -> Polynomial:
        if self.phi is None:
            raise MissingCharacteristicError(f"Characteristic {self.name} has no Phi but X appears")
        return self.phi
