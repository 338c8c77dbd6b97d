from ..jetexpr import inv_dzbar, exact_antiderivative
from .nonlocal_atoms import NonlocalAtom, NonlocalRegistry, consistency_residual, materialize, nonlocal_names
from .operators import iso_I, lift_J, r_hat, t_hat, unlift_J
from .checks import (
    IsomorphismSides, CommutationSides, equal_in_covering, i_equivalence_check, isomorphism_check,
    isomorphism_sides, lemma22_check, commutation_sides, preserves_trace_psdym, preserves_trace_sdym,
    psdym_recursion_residual, sdym_recursion_residual, vanishes_in_covering,
)

__all__ = [
    "inv_dzbar", "exact_antiderivative",
    "NonlocalAtom", "NonlocalRegistry", "consistency_residual", "materialize", "nonlocal_names",
    "iso_I", "lift_J", "r_hat", "t_hat", "unlift_J",
    "IsomorphismSides", "CommutationSides", "equal_in_covering", "i_equivalence_check", "isomorphism_check",
    "isomorphism_sides", "lemma22_check", "commutation_sides", "preserves_trace_psdym", "preserves_trace_sdym",
    "psdym_recursion_residual", "sdym_recursion_residual", "vanishes_in_covering",
]
