"""Exceptions raised by the U_q(sl2) package."""


class Uqsl2Error(Exception):
    """Base class for U_q(sl2) errors."""


class TruncationExceeded(Uqsl2Error):
    """Raised when the Verma action leaves the truncated span v_0..v_N."""

    def __init__(self, index: int, truncation: int):
        self.index = index
        self.truncation = truncation
        super().__init__(f"Verma action reached v_{index}, beyond truncation N = {truncation}")


class GrammarError(Uqsl2Error):
    """Raised when element text cannot be parsed."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"{reason} at position {position}: {text[position:position + 30]!r}")
