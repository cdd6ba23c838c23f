"""
U_q(sl2) Configuration

Settings for PBW straightening and the Verma-module oracle.
"""

import os
from dataclasses import dataclass


@dataclass
class Uqsl2Config:
    """
    Attributes:
        straighten_memo: Memoize E^c F^a straightening and monomial products
        verma_truncation: Highest Verma basis index N (vectors v_0..v_N)
        verma_sample_v: Rational value of v used for exact rank certificates
    """
    straighten_memo: bool = True
    verma_truncation: int = 10
    verma_sample_v: int = 2

    def __post_init__(self):
        # Load from environment variable (priority 1)
        env_memo = os.environ.get("UQSL2_STRAIGHTEN_MEMO")
        if env_memo is not None:
            self.straighten_memo = env_memo.lower() in ("true", "1", "yes", "on")
        env_truncation = os.environ.get("UQSL2_VERMA_TRUNCATION")
        if env_truncation is not None and env_truncation.strip():
            self.verma_truncation = int(env_truncation)
        # Default values from dataclass fields are priority 3


# Default configuration instance
config = Uqsl2Config()
