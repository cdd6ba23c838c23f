"""Exceptions raised by the classical side."""


class PoissonError(Exception):
    """Base class for classical Poisson algebra errors."""


class NotInSmallCenter(PoissonError):
    """Raised when an element of U_eps^{(x) n} is not a polynomial in the x, y, z^{+-1} of its slots."""

    def __init__(self, monomial, reason: str):
        self.monomial = monomial
        super().__init__(f"Monomial {monomial} is not in Z_0: {reason}")
