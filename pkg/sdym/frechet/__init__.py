from .characteristic import Characteristic
from .covariant import connection, cov_Ay, cov_Az
from .derivation import frechet, vary_atom
from .residuals import (
    ConnectionVariation, bt17_residuals, curvature_residual, eq12_sides, identity_15_residual,
    psdym_residual, sdym_residual, verify_eq12, verify_identity_15, verify_zero_curvature,
)

__all__ = [
    "Characteristic", "connection", "cov_Ay", "cov_Az", "frechet", "vary_atom",
    "ConnectionVariation", "bt17_residuals", "curvature_residual", "eq12_sides", "identity_15_residual",
    "psdym_residual", "sdym_residual", "verify_eq12", "verify_identity_15", "verify_zero_curvature",
]
