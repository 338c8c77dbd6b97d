from .scalars import (
    GaussianRational, ZERO, ONE, I_UNIT, rational, gaussian, as_gaussian,
    format_gaussian, parse_gaussian, magnitude,
)
from .matrices import ConstMatrix, commutator, trace, const_inverse
from .lie import LieBasis, structure_constants

__all__ = [
    "GaussianRational", "ZERO", "ONE", "I_UNIT", "rational", "gaussian", "as_gaussian",
    "format_gaussian", "parse_gaussian", "magnitude",
    "ConstMatrix", "commutator", "trace", "const_inverse",
    "LieBasis", "structure_constants",
]
