"""
Laurent polynomials in v = q^{1/2} over the rationals.

A LaurentPoly is stored as v^shift * p(v) with p a sympy polynomial whose
constant term is nonzero (or p = 0 and shift = 0), so equality is structural.
q is v**2 throughout.
"""

from fractions import Fraction
from typing import Dict, Mapping, Union

from sympy.polys.domains import QQ
from sympy.polys.fields import field

# Shared by LaurentPoly and RatFunc so numerators and denominators live in one ring
LAURENT_FIELD, FIELD_V = field("v", QQ)
LAURENT_RING = LAURENT_FIELD.ring

Rational = Union[int, Fraction]


def to_qq(value: Rational):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class LaurentPoly:
    """Immutable Laurent polynomial in v with rational coefficients."""

    __slots__ = ("_shift", "_poly")

    def __init__(self, coefficients: Mapping[int, Rational] = None):
        terms = {}
        for exponent, coefficient in (coefficients or {}).items():
            if coefficient:
                terms[int(exponent)] = to_qq(coefficient)
        low = min(terms) if terms else 0
        self._shift = low
        self._poly = LAURENT_RING.from_dict({(k - low,): c for k, c in terms.items()})

    @classmethod
    def from_polynomial(cls, poly, shift: int = 0) -> "LaurentPoly":
        """Wrap v^shift * poly, poly an element of LAURENT_RING."""
        result = cls.__new__(cls)
        if not poly:
            result._shift, result._poly = 0, LAURENT_RING.zero
            return result
        low = min(monom[0] for monom in poly.keys())
        if low:
            poly = LAURENT_RING.from_dict({(monom[0] - low,): c for monom, c in poly.items()})
        result._shift, result._poly = shift + low, poly
        return result

    @classmethod
    def monomial(cls, exponent: int, coefficient: Rational = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    # ------------------------------------------------------------------
    # views
    # ------------------------------------------------------------------
    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return {monom[0] + self._shift: from_qq(c) for monom, c in self._poly.items()}

    @property
    def polynomial(self):
        """The polynomial part p with self = v^shift * p."""
        return self._poly

    @property
    def shift(self) -> int:
        return self._shift

    @property
    def is_zero(self) -> bool:
        return not self._poly

    @property
    def is_one(self) -> bool:
        return self._shift == 0 and self._poly == LAURENT_RING.one

    def lowest_exponent(self) -> int:
        return self._shift

    def highest_exponent(self) -> int:
        return self._shift + self._poly.degree() if self._poly else 0

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self._shift, other._shift)
        total = (self._poly.mul_monom((self._shift - low,))
                 + other._poly.mul_monom((other._shift - low,)))
        return LaurentPoly.from_polynomial(total, low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly.from_polynomial(-self._poly, self._shift)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly.from_polynomial(self._poly * other._poly, self._shift + other._shift)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            if len(self._poly) != 1:
                raise ValueError("Only monomials have Laurent inverses")
            (monom, coefficient), = self._poly.items()
            inverse = LaurentPoly({-self._shift: 1 / from_qq(coefficient)})
            return inverse ** (-exponent)
        return LaurentPoly.from_polynomial(self._poly ** exponent, self._shift * exponent)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._shift == other._shift and self._poly == other._poly

    def __hash__(self):
        return hash((self._shift, tuple(sorted(self.coefficients.items()))))

    def __bool__(self):
        return bool(self._poly)

    def __str__(self):
        if self.is_zero:
            return "0"
        return " + ".join(f"{c}*v^{k}" for k, c in sorted(self.coefficients.items()))

    def __repr__(self):
        return f"LaurentPoly({self})"
