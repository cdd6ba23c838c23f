"""Skein Errors"""


class SkeinError(Exception):
    """Base class for errors of the skein package."""


class CurveSpecError(SkeinError):
    """A curve description that cannot be parsed or does not fit the surface."""

    def __init__(self, text: str, reason: str):
        self.text = text
        self.reason = reason
        super().__init__(f"Invalid curve '{text}': {reason}")
