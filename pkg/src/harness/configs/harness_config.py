"""
Harness Configuration

The parameters of one suite run. The CLI starts from the module-level defaults
(environment overrides applied) and sets every flag it was given on top.
"""

import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from common.config import config as app_config
from harness.errors import ConfigError

SUITE_NAMES = (
    "presentation", "alekseev", "center", "frobenius", "threading",
    "qca", "poisson", "dressing", "skein", "all",
)


@dataclass
class SuiteConfig:
    """
    Configuration of a suite run.

    Attributes:
        suite: One of SUITE_NAMES
        n: Number of punctures
        l: Odd order of the root of unity eps
        max_degree: PBW degree bound for the alekseev and skein independence checks
            (None: each suite's own default)
        series_order: Truncation order of the exponential series (None: qca default)
        jobs: Worker threads
        report_path: JSON report location (None: reports/<suite>_n<n>_l<l>.json)
        override_bounds: Run parameters outside the documented safe bounds
        seed: Seed for the randomized samples, echoed in the report
        curves: Extra curve descriptions for the skein suite
    """
    suite: str = "all"
    n: int = 1
    l: int = 3
    max_degree: Optional[int] = None
    series_order: Optional[int] = None
    jobs: int = field(default_factory=lambda: app_config.runtime.jobs)
    report_path: Optional[str] = None
    override_bounds: bool = False
    seed: int = field(default_factory=lambda: app_config.runtime.seed)
    curves: List[str] = field(default_factory=list)

    def __post_init__(self):
        # Load from environment variable (priority 1)
        env_suite = os.environ.get("HARNESS_SUITE")
        if env_suite:
            self.suite = env_suite
        env_override = os.environ.get("HARNESS_OVERRIDE_BOUNDS")
        if env_override is not None:
            self.override_bounds = env_override.lower() in ("true", "1", "yes", "on")
        # Note: .env file loading would happen here if implemented (priority 2)
        # Default values from dataclass fields are priority 3

    def validate(self) -> "SuiteConfig":
        """
        Raises:
            ConfigError: unknown suite, non-positive sizes or an even l
        """
        if self.suite not in SUITE_NAMES:
            raise ConfigError("suite", f"'{self.suite}' is not one of {', '.join(SUITE_NAMES)}")
        if self.n < 1:
            raise ConfigError("n", f"need at least one puncture, got {self.n}")
        if self.l < 3 or self.l % 2 == 0:
            raise ConfigError("l", f"the order of eps must be odd and at least 3, got {self.l}")
        if self.max_degree is not None and self.max_degree < 0:
            raise ConfigError("max_degree", f"must be non-negative, got {self.max_degree}")
        if self.series_order is not None and self.series_order < 1:
            raise ConfigError("series_order", f"must be positive, got {self.series_order}")
        if self.jobs < 1:
            raise ConfigError("jobs", f"must be positive, got {self.jobs}")
        return self

    def bound_violation(self) -> Optional[str]:
        """Why the parameters leave the safe bounds, or None when they do not (or are overridden)."""
        if self.override_bounds:
            return None
        bounds = app_config.bounds
        if self.n > bounds.max_n:
            return f"n={self.n} exceeds the safe bound {bounds.max_n}; rerun with --override-bounds"
        if self.l not in bounds.allowed_l:
            allowed = ", ".join(str(l) for l in bounds.allowed_l)
            return f"l={self.l} is outside the safe values {allowed}; rerun with --override-bounds"
        if self.max_degree is not None and self.max_degree > bounds.max_degree:
            return (f"max_degree={self.max_degree} exceeds the safe bound {bounds.max_degree}; "
                    f"rerun with --override-bounds")
        if self.series_order is not None and self.series_order > bounds.max_series_order:
            return (f"series_order={self.series_order} exceeds the safe bound "
                    f"{bounds.max_series_order}; rerun with --override-bounds")
        return None

    def echo(self) -> Dict[str, Any]:
        return {
            "suite": self.suite, "n": self.n, "l": self.l,
            "max_degree": self.max_degree, "series_order": self.series_order,
            "jobs": self.jobs, "override_bounds": self.override_bounds,
            "seed": self.seed, "curves": list(self.curves),
        }


# Default configuration instance
config = SuiteConfig()
