"""
Poisson Configuration

Defaults for the classical bracket checks.
"""

import os
from dataclasses import dataclass


@dataclass
class PoissonConfig:
    """
    Attributes:
        jacobi_sample: Number of variable triples checked for Jacobi (0 = all triples)
        cross_site_pairs: Generator pairs checked by fr_is_poisson for n >= 2 (0 = all pairs)
        dressing_max_n: Largest n for the dressing identity
    """
    jacobi_sample: int = 0
    cross_site_pairs: int = 10
    dressing_max_n: int = 3

    def __post_init__(self):
        # Load from environment variable (priority 1)
        env_sample = os.environ.get("POISSON_JACOBI_SAMPLE")
        if env_sample is not None and env_sample.strip():
            self.jacobi_sample = int(env_sample)
        env_pairs = os.environ.get("POISSON_CROSS_SITE_PAIRS")
        if env_pairs is not None and env_pairs.strip():
            self.cross_site_pairs = int(env_pairs)
        # Default values from dataclass fields are priority 3


# Default configuration instance
config = PoissonConfig()
