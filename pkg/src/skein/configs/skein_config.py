"""
Skein Configuration

Defaults for the Wilson loop and Chebyshev center checks.
"""

import os
from dataclasses import dataclass


@dataclass
class SkeinConfig:
    """
    Attributes:
        monomial_degree: Largest total degree of the monomials in omega(i), eta tested for independence
        independence_max_n: Largest n for the independence rank check
        sample_v: Rational value of v at which the rank is certified
    """
    monomial_degree: int = 3
    independence_max_n: int = 3
    sample_v: int = 2

    def __post_init__(self):
        # Load from environment variable (priority 1)
        env_degree = os.environ.get("SKEIN_MONOMIAL_DEGREE")
        if env_degree is not None and env_degree.strip():
            self.monomial_degree = int(env_degree)
        # Default values from dataclass fields are priority 3


# Default configuration instance
config = SkeinConfig()
