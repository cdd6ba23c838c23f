"""Exceptions raised by the coefficient tower."""


class ScalarError(Exception):
    """Base class for scalar arithmetic errors."""


class NotInvertible(ScalarError):
    """Raised when inverting zero (or a zero divisor) in a coefficient ring."""


class PoleAtSpecialization(ScalarError):
    """
    Raised when a reduced denominator vanishes at the specialization point.

    The value does not lie in the integral form being specialized. When raised
    while specializing an algebra element, `where` names the offending monomial.
    """

    def __init__(self, value, point, where=None):
        self.value = value
        self.point = point
        self.where = where
        location = f" at monomial {where}" if where is not None else ""
        super().__init__(f"Denominator of {value} vanishes at {point}{location}")
