from .operators import L_TERMS, SymmetryOperator, apply_L, catalogue, i_catalogue
from .structure import StructureTable, base_structure_table, operator_commutator
from .generator import (
    HierarchyCatalog, HierarchyEntry, generate_hierarchy, local_in_j, local_in_x, next_level,
)
from .brackets import (
    ORACLE_CAP, SYMBOLIC_CAP, Oracle, OracleVerdict, VerificationOutcome, bracket, hierarchy_coherence,
    sdym_bracket_residual, verify_kac_moody, verify_sdym_kac_moody, verify_virasoro,
)

__all__ = [
    "L_TERMS", "SymmetryOperator", "apply_L", "catalogue", "i_catalogue",
    "StructureTable", "base_structure_table", "operator_commutator",
    "HierarchyCatalog", "HierarchyEntry", "generate_hierarchy", "local_in_j", "local_in_x", "next_level",
    "ORACLE_CAP", "SYMBOLIC_CAP", "Oracle", "OracleVerdict", "VerificationOutcome", "bracket",
    "hierarchy_coherence", "sdym_bracket_residual", "verify_kac_moody", "verify_sdym_kac_moody",
    "verify_virasoro",
]
