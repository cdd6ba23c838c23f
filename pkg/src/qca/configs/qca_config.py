"""
Quantum Coadjoint Action Configuration

Defaults for derivations, exponential series and the lift-independence samples.
"""

import os
from dataclasses import dataclass


@dataclass
class QcaConfig:
    """
    Attributes:
        series_order: Truncation order N of exp(tV) when a suite is run without --series-order
        junk_samples: Random junk elements per lift-independence check
        junk_degree: Largest PBW degree of a junk element
        diagonal_max_n: Largest n for the diagonal triple and the invariance checks
    """
    series_order: int = 4
    junk_samples: int = 3
    junk_degree: int = 2
    diagonal_max_n: int = 2

    def __post_init__(self):
        # Load from environment variable (priority 1)
        env_order = os.environ.get("QCA_SERIES_ORDER")
        if env_order is not None and env_order.strip():
            self.series_order = int(env_order)
        env_samples = os.environ.get("QCA_JUNK_SAMPLES")
        if env_samples is not None and env_samples.strip():
            self.junk_samples = int(env_samples)
        # Default values from dataclass fields are priority 3


# Default configuration instance
config = QcaConfig()
