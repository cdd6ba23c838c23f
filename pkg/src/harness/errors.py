"""Harness Errors"""


class HarnessError(Exception):
    """Base class for errors of the verification harness."""


class ConfigError(HarnessError):
    """A suite configuration that cannot be run: unknown suite or invalid parameter."""

    def __init__(self, field: str, reason: str):
        self.field = field
        self.reason = reason
        super().__init__(f"Invalid value for {field}: {reason}")
