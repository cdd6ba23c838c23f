"""
Harness Package

Verification harness: identity checks, reports, the suite registry, the
concurrent runner and the command-line interface. Only the report types and
errors are imported here so the algebra packages can build checks without
import cycles.
"""

from harness.errors import ConfigError, HarnessError
from harness.report import (
    IdentityCheck, IdentityRecord, Report, Status, witness_of, equality_witness, TOOL_VERSION,
)

__all__ = [
    'ConfigError', 'HarnessError',
    'IdentityCheck', 'IdentityRecord', 'Report', 'Status', 'witness_of', 'equality_witness',
    'TOOL_VERSION',
]
