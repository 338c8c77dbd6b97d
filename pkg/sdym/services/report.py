from dataclasses import dataclass, field
from typing import Callable, Optional
import logging
import time

from ..exceptions import SdymError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CaseOutcome:
    passed: bool
    mode: str = "symbolic"
    witness: Optional[str] = None


@dataclass(frozen=True)
class Report:
    suite: str
    check: str
    status: str
    mode: str
    witness: Optional[str]
    elapsed: float
    config: dict = field(default_factory=dict)

    @property
    def case_id(self) -> str:
        return f"{self.suite}:{self.check}"

    @property
    def passed(self) -> bool:
        return self.status == "pass"


Case = Callable[[], CaseOutcome]


def run_case(suite: str, check: str, case: Case, config: dict) -> Report:
    """Run one check, turning any exception into a failed report."""
    started = time.perf_counter()
    try:
        outcome = case()
    except SdymError as e:
        logger.warning(f"{suite}:{check} raised {type(e).__name__}: {str(e)}")
        outcome = CaseOutcome(False, witness=f"{type(e).__name__}: {str(e)}")
    except Exception as e:
        logger.error(f"Unexpected error in {suite}:{check}: {str(e)}", exc_info=True)
        outcome = CaseOutcome(False, witness=f"{type(e).__name__}: {str(e)}")
    elapsed = round(time.perf_counter() - started, 3)

    witness = outcome.witness
    if not outcome.passed and not witness:
        witness = "check failed"
    status = "pass" if outcome.passed else "fail"
    log = logger.info if outcome.passed else logger.warning
    log(f"{suite}:{check} {status} ({elapsed}s)")
    return Report(suite, check, status, outcome.mode, witness if not outcome.passed else None, elapsed, dict(config))
