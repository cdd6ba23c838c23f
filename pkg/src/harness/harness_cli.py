"""
Command-line interface of the verification harness.

Usage:
    python main.py --suite presentation --n 2
    python main.py --suite all --n 1 --l 3 --jobs 4 --report reports/full.json
    python main.py --suite skein --n 2 --curve arc:1..2^l --curve boundary:1@1
    python main.py --normalize "[1*v^0] * F^0 K^1 E^0"

Exit status: 0 when every identity holds, 1 when any identity fails,
2 for an invalid configuration or element text.
"""

import argparse
import sys
from pathlib import Path

from common.config import config as app_config
from common.logging_utils import get_logger, set_console_level
from common.utils.file_sys_utils import default_report_path, resolve_path
from harness.configs.harness_config import SUITE_NAMES, SuiteConfig
from harness.errors import ConfigError
from harness.registry import run
from uqsl2 import GrammarError, format_element, parse_element

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


def parse_arguments(argv=None):
    """Parse command line arguments for the harness."""
    parser = argparse.ArgumentParser(
        description="Verify the identities of L_0,n(sl2) and its root-of-unity center"
    )

    parser.add_argument(
        "--suite", "-s",
        choices=SUITE_NAMES,
        help="Suite to run (default: all)"
    )

    parser.add_argument(
        "--n",
        type=int,
        help="Number of punctures (default: 1)"
    )

    parser.add_argument(
        "--l",
        type=int,
        help="Odd order of the root of unity (default: 3)"
    )

    parser.add_argument(
        "--max-degree",
        type=int,
        help="PBW degree bound for the injectivity and monomial independence checks"
    )

    parser.add_argument(
        "--series-order",
        type=int,
        help="Truncation order of the exponential series in the qca suite"
    )

    parser.add_argument(
        "--jobs", "-j",
        type=int,
        help=f"Worker threads (default from config: {app_config.runtime.jobs})"
    )

    parser.add_argument(
        "--report", "-o",
        help="Path of the JSON report (default: reports/<suite>_n<n>_l<l>.json)"
    )

    parser.add_argument(
        "--override-bounds",
        action="store_true",
        help="Run parameters outside the documented safe bounds"
    )

    parser.add_argument(
        "--seed",
        type=int,
        help=f"Seed of the randomized samples (default from config: {app_config.runtime.seed})"
    )

    parser.add_argument(
        "--curve",
        action="append",
        default=[],
        help="Extra curve for the skein suite, e.g. arc:1..2^l or boundary:1@1 (repeatable)"
    )

    parser.add_argument(
        "--normalize",
        metavar="ELEMENT",
        help="Parse an element in the text grammar, print its canonical form and exit"
    )

    parser.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Log DEBUG output on the console"
    )

    return parser.parse_args(argv)


def build_config(args) -> SuiteConfig:
    """SuiteConfig defaults with every given flag set on top."""
    cfg = SuiteConfig()
    if args.suite:
        cfg.suite = args.suite
    if args.n is not None:
        cfg.n = args.n
    if args.l is not None:
        cfg.l = args.l
    if args.max_degree is not None:
        cfg.max_degree = args.max_degree
    if args.series_order is not None:
        cfg.series_order = args.series_order
    if args.jobs is not None:
        cfg.jobs = args.jobs
    if args.report:
        cfg.report_path = args.report
    if args.override_bounds:
        cfg.override_bounds = True
    if args.seed is not None:
        cfg.seed = args.seed
    cfg.curves = list(args.curve)
    return cfg.validate()


def normalize(text: str, logger) -> int:
    try:
        element = parse_element(text)
    except GrammarError as e:
        logger.error(f"Element text rejected: {e}")
        print(f"Error: {e}")
        return EXIT_CONFIG
    print(format_element(element))
    return EXIT_PASS


def print_report(report, report_path: Path):
    summary = report.summary
    print("\n" + "-" * 40)
    print(f"Suite: {report.suite}")
    print(f"Passed: {summary['pass']}  Failed: {summary['fail']}  "
          f"Skipped: {summary['skipped']}  Total: {summary['total']}")
    for record in report.failures():
        print(f"  FAIL {record.identity_id}: {record.witness}")
    for record in report.records:
        if record.status.value == "skipped":
            print(f"  SKIP {record.identity_id}: {record.witness}")
    print("-" * 40)
    print(f"Report saved to: {report_path}")


def main(argv=None) -> int:
    """Main function of the harness CLI; returns the exit status."""
    args = parse_arguments(argv)

    global logger
    logger = get_logger("harness_cli")
    if args.verbose:
        for name in ("harness_cli", "harness", "graphalg", "rootcenter", "qca", "poisson", "skein"):
            set_console_level(get_logger(name), "DEBUG")
    logger.debug(f"Starting harness with arguments: {args}")

    if args.normalize is not None:
        return normalize(args.normalize, logger)

    try:
        cfg = build_config(args)
    except ConfigError as e:
        logger.error(f"Configuration rejected: {e}")
        print(f"Error: {e}")
        return EXIT_CONFIG

    if cfg.report_path:
        report_path = resolve_path(cfg.report_path)
    else:
        report_path = default_report_path(cfg.suite, cfg.n, cfg.l, app_config.runtime.report_dir)
    logger.debug(f"Report file: {report_path}")

    try:
        print(f"Running suite '{cfg.suite}' for n={cfg.n}, l={cfg.l} with {cfg.jobs} job(s)...")
        report = run(cfg)
        report.write(report_path)
        print_report(report, report_path)
    except ConfigError as e:
        logger.error(f"Configuration rejected: {e}")
        print(f"Error: {e}")
        return EXIT_CONFIG
    except Exception as e:
        logger.error(f"Suite run failed: {e}")
        import traceback
        logger.error(traceback.format_exc())
        print(f"Error: {e}")
        return EXIT_FAIL

    if report.passed:
        logger.info(f"Suite '{cfg.suite}' passed: {report.summary}")
        return EXIT_PASS
    logger.warning(f"Suite '{cfg.suite}' has {len(report.failures())} failing identities")
    return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
