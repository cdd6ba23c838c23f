"""
Concurrent execution of identity checks.

Checks are independent and pure, so they run on a thread pool up to the
configured number of jobs; the report is sorted by identity id, which makes it
independent of completion order.
"""

import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Iterable, List

from common.logging_utils import get_logger
from harness.report import IdentityCheck, IdentityRecord, Report, Status

logger = get_logger("harness")


def run_check(check: IdentityCheck) -> IdentityRecord:
    """Evaluate one check; exceptions become failing records, never propagate."""
    inputs = dict(check.inputs)
    if check.skip_reason is not None:
        logger.info(f"{check.identity_id}: skipped ({check.skip_reason})")
        return IdentityRecord(check.identity_id, check.citation, inputs, Status.SKIPPED,
                              check.skip_reason)
    start = time.perf_counter()
    try:
        witness = check.evaluate()
        status = Status.PASS if witness is None else Status.FAIL
    except Exception as e:
        logger.error(f"{check.identity_id} raised {type(e).__name__}: {e}")
        logger.error(traceback.format_exc())
        witness = f"{type(e).__name__}: {e}"
        status = Status.FAIL
    elapsed = time.perf_counter() - start
    if status is Status.FAIL:
        logger.warning(f"{check.identity_id}: FAIL ({elapsed:.2f}s) witness: {witness}")
    else:
        logger.info(f"{check.identity_id}: pass ({elapsed:.2f}s)")
    return IdentityRecord(check.identity_id, check.citation, inputs, status, witness, elapsed)


def run_checks(checks: Iterable[IdentityCheck], suite: str, jobs: int = 1,
               config_echo: Dict[str, Any] = None) -> Report:
    checks: List[IdentityCheck] = list(checks)
    logger.debug(f"Running {len(checks)} checks of suite '{suite}' with {jobs} job(s)")
    if jobs <= 1:
        records = [run_check(check) for check in checks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_check, checks))
    return Report(suite, records, dict(config_echo or {}))


def skipped(identity_id: str, citation: str, reason: str, **inputs) -> IdentityCheck:
    """A check that is reported as skipped, e.g. when parameters leave the safe bounds."""
    return IdentityCheck(identity_id, citation, inputs, lambda: None, skip_reason=reason)
