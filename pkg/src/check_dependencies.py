#!/usr/bin/env python3
"""
Dependency Checker

Checks that the computational libraries import before a suite run starts,
so a missing package is reported up front instead of as a failing identity.

Configuration for enabled/disabled checks lives in common.config.config_app

Usage:
    python src/check_dependencies.py
"""

import importlib
import sys
from pathlib import Path

# Allow running this file directly from src/
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from common.logging_utils import get_logger
from common.config import config

logger = get_logger("dependency_checker")

MINIMUM_VERSIONS = {
    "numpy": (1, 22),
    "sympy": (1, 12),
}


def _version_tuple(text: str) -> tuple:
    parts = []
    for piece in text.split(".")[:2]:
        digits = "".join(ch for ch in piece if ch.isdigit())
        parts.append(int(digits) if digits else 0)
    return tuple(parts)


def check_package(name: str):
    """
    Check that a package imports and meets the minimum version.

    Returns:
        tuple: (bool, str) - (is_usable, message)
    """
    try:
        module = importlib.import_module(name)
    except ImportError:
        logger.error(f"{name} not installed")
        return False, f"[FAIL] {name} is NOT installed - pip install -r requirements.txt"

    version = getattr(module, "__version__", "0")
    minimum = MINIMUM_VERSIONS.get(name, (0,))
    if _version_tuple(version) < minimum:
        wanted = ".".join(str(part) for part in minimum)
        logger.warning(f"{name} {version} is older than {wanted}")
        return False, f"[FAIL] {name} {version} is too old (need >= {wanted})"

    logger.info(f"{name} found: {version}")
    return True, f"[OK] {name} {version}"


def check_all_dependencies():
    """
    Run every enabled check.

    Returns:
        dict: name -> (bool, message), only for enabled checks
    """
    results = {}
    for name in config.dependency_checks.get_enabled_checks():
        logger.debug(f"Running {name} check (enabled)")
        results[name] = check_package(name)
    return results


def print_results(results) -> bool:
    """Print a banner with one line per check; return True if all passed."""
    print("\n" + "=" * 70)
    print("DEPENDENCY CHECK RESULTS")
    print("=" * 70)

    if not results:
        print("\n[INFO] No checks were enabled.")
        return True

    all_ok = True
    for status, message in results.values():
        print(message)
        all_ok = all_ok and status

    print("=" * 70)
    if all_ok:
        print("[OK] All checked dependencies are satisfied.")
    else:
        print("[FAIL] Some dependencies are missing or too old.")
    print("=" * 70)
    return all_ok


def main() -> int:
    try:
        logger.info("Starting dependency check")
        results = check_all_dependencies()
        all_ok = print_results(results)
        passed = sum(1 for status, _ in results.values() if status)
        logger.info(f"Dependency check completed: {passed}/{len(results)} passed")
        return 0 if all_ok else 1
    except Exception as e:
        logger.error(f"Error during dependency check: {e}")
        import traceback
        logger.error(traceback.format_exc())
        print(f"Error: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
