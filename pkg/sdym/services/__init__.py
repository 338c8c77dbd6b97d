from .expression_service import ExpressionService
from .fixture_service import FixtureService
from .hierarchy_service import HierarchyService
from .report import CaseOutcome, Report, run_case
from .verification_service import SUITE_ORDER, VerificationService

__all__ = [
    "ExpressionService", "FixtureService", "HierarchyService", "VerificationService",
    "CaseOutcome", "Report", "run_case", "SUITE_ORDER",
]
