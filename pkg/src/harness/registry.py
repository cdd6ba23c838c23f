"""
Suite registry.

Maps every suite name to the builder of its identity checks and runs a
SuiteConfig. Parameters outside the safe bounds do not raise: the suite is
reported with a single skipped record naming the bound.
"""

from typing import Callable, Dict, List

from common.config import config as app_config
from common.logging_utils import get_logger
from harness.configs.harness_config import SUITE_NAMES, SuiteConfig
from harness.errors import ConfigError
from harness.report import IdentityCheck, Report
from harness.runner import run_checks, skipped
from graphalg import alekseev_checks, center_checks, presentation_checks
from rootcenter import frobenius_checks, threading_checks
from qca import qca_checks
from poisson import dressing_suite_checks, poisson_checks
from skein import CurveSpecError, parse_curve, skein_checks

logger = get_logger("harness")

SuiteBuilder = Callable[[SuiteConfig], List[IdentityCheck]]


def _skein(cfg: SuiteConfig) -> List[IdentityCheck]:
    try:
        curves = [parse_curve(text, cfg.l).validate(cfg.n) for text in cfg.curves]
        return skein_checks(cfg.n, cfg.l, cfg.max_degree, curves)
    except CurveSpecError as e:
        raise ConfigError("curve", str(e)) from e


SUITES: Dict[str, SuiteBuilder] = {
    "presentation": lambda cfg: presentation_checks(cfg.n),
    "alekseev": lambda cfg: alekseev_checks(cfg.n, cfg.max_degree),
    "center": lambda cfg: center_checks(cfg.n),
    "frobenius": lambda cfg: frobenius_checks(cfg.n, cfg.l),
    "threading": lambda cfg: threading_checks(cfg.n, cfg.l),
    "qca": lambda cfg: qca_checks(cfg.n, cfg.l, cfg.series_order),
    "poisson": lambda cfg: poisson_checks(cfg.n, cfg.l),
    "dressing": lambda cfg: dressing_suite_checks(cfg.n, cfg.l),
    "skein": _skein,
}


def suite_members(suite: str) -> List[str]:
    if suite == "all":
        return list(SUITES)
    if suite not in SUITES:
        raise ConfigError("suite", f"'{suite}' is not one of {', '.join(SUITE_NAMES)}")
    return [suite]


def build_checks(cfg: SuiteConfig) -> List[IdentityCheck]:
    """
    The identity checks of the configured suite ("all" concatenates every suite,
    keeping the first check of each identity id).

    Raises:
        ConfigError: invalid configuration or curve description
    """
    cfg.validate()
    reason = cfg.bound_violation()
    members = suite_members(cfg.suite)
    if reason is not None:
        logger.warning(f"Suite '{cfg.suite}' skipped: {reason}")
        return [skipped(f"{member}.bounds.n{cfg.n}.l{cfg.l}", "parameters inside the safe bounds",
                        reason, n=cfg.n, l=cfg.l) for member in members]
    checks: Dict[str, IdentityCheck] = {}
    for member in members:
        built = SUITES[member](cfg)
        logger.debug(f"Suite '{member}': {len(built)} checks")
        for check in built:
            checks.setdefault(check.identity_id, check)
    return list(checks.values())


def run(cfg: SuiteConfig) -> Report:
    """Run the configured suite; failing identities are records, never exceptions."""
    app_config.runtime.seed = cfg.seed
    checks = build_checks(cfg)
    logger.info(f"Running suite '{cfg.suite}' ({len(checks)} checks, n={cfg.n}, l={cfg.l}, jobs={cfg.jobs})")
    report = run_checks(checks, cfg.suite, cfg.jobs, cfg.echo())
    logger.info(f"Suite '{cfg.suite}' finished: {report.summary}")
    return report
