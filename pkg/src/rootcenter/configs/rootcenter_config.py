"""
Root-of-unity Center Configuration

Defaults for the Frobenius, centrality and threading suites.
"""

import os
from dataclasses import dataclass


@dataclass
class RootCenterConfig:
    """
    Attributes:
        default_l: Order of eps used when a suite is run without --l
        max_threading_sites: Longest site tuple in the threading suite
        general_tuples: Also thread non-consecutive site tuples
    """
    default_l: int = 3
    max_threading_sites: int = 3
    general_tuples: bool = True

    def __post_init__(self):
        # Load from environment variable (priority 1)
        env_l = os.environ.get("ROOTCENTER_DEFAULT_L")
        if env_l is not None and env_l.strip():
            self.default_l = int(env_l)
        env_tuples = os.environ.get("ROOTCENTER_GENERAL_TUPLES")
        if env_tuples is not None:
            self.general_tuples = env_tuples.lower() in ("true", "1", "yes", "on")
        # Default values from dataclass fields are priority 3


# Default configuration instance
config = RootCenterConfig()
