"""
Scalar Configuration

Memo sizes for the coefficient tower. Specialization of structure constants is
memoized; the memo is transparent (results are identical with it disabled).
"""

import os
from dataclasses import dataclass


@dataclass
class ScalarConfig:
    """
    Attributes:
        specialize_memo_size: Entries kept by the specialization memo (0 disables it)
    """
    specialize_memo_size: int = 65536

    def __post_init__(self):
        # Load from environment variable (priority 1)
        env_size = os.environ.get("SCALAR_MEMO_SIZE")
        if env_size is not None and env_size.strip():
            self.specialize_memo_size = int(env_size)
        # Default value from dataclass field is priority 3


# Default configuration instance
config = ScalarConfig()
