"""
Application Configuration

Application-wide settings for the verification harness: the documented safe
bounds for suite parameters, runtime settings (parallelism, seed, report
directory) and the startup dependency-check flags.
All configuration values use dataclasses for IDE support and type safety.
"""

import os
from dataclasses import dataclass, field
from typing import List, Tuple


def _env_int(name: str, current: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return current
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got '{raw}'")


@dataclass
class DependencyCheckFlags:
    """
    Flags for the startup dependency check.

    Attributes:
        check_numpy: Verify numpy imports (matrix containers)
        check_sympy: Verify sympy imports (polynomial rings, exact rank)
    """
    check_numpy: bool = True
    check_sympy: bool = True

    def get_enabled_checks(self) -> List[str]:
        enabled = []
        if self.check_numpy:
            enabled.append('numpy')
        if self.check_sympy:
            enabled.append('sympy')
        return enabled


@dataclass
class SafeBounds:
    """
    Parameter ranges inside which suites run without --override-bounds.

    Attributes:
        max_n: Largest number of punctures
        allowed_l: Root-of-unity orders run by default
        max_word_length: Longest generator word in presentation checks
        max_degree: Largest PBW degree in independence checks
        max_series_order: Largest truncation order of exponential series
        verma_truncation: Highest Verma basis vector index
    """
    max_n: int = 3
    allowed_l: Tuple[int, ...] = (3, 5)
    max_word_length: int = 6
    max_degree: int = 4
    max_series_order: int = 6
    verma_truncation: int = 10

    def __post_init__(self):
        # Load from environment variable (priority 1)
        self.max_n = _env_int("GRAPHALG_MAX_N", self.max_n)
        env_l = os.environ.get("GRAPHALG_ALLOWED_L")
        if env_l:
            self.allowed_l = tuple(int(part) for part in env_l.split(",") if part.strip())
        # Note: .env file loading would happen here if implemented (priority 2)
        # Default values from dataclass fields are priority 3

    def admits(self, n: int, l: int) -> bool:
        return 1 <= n <= self.max_n and l in self.allowed_l


@dataclass
class RuntimeSettings:
    """
    Runtime settings of a harness run.

    Attributes:
        jobs: Worker threads for suite items
        seed: Seed for every randomized sample (recorded in reports)
        report_dir: Directory for JSON reports, relative to the project root
    """
    jobs: int = 1
    seed: int = 20240101
    report_dir: str = "reports"

    def __post_init__(self):
        # Load from environment variable (priority 1)
        self.jobs = _env_int("GRAPHALG_JOBS", self.jobs)
        self.seed = _env_int("GRAPHALG_SEED", self.seed)
        env_dir = os.environ.get("GRAPHALG_REPORT_DIR")
        if env_dir:
            self.report_dir = env_dir


@dataclass
class AppConfig:
    """Complete application configuration."""
    dependency_checks: DependencyCheckFlags = field(default_factory=DependencyCheckFlags)
    bounds: SafeBounds = field(default_factory=SafeBounds)
    runtime: RuntimeSettings = field(default_factory=RuntimeSettings)


# Default configuration instance
config = AppConfig()
