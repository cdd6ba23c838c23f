"""
Reduced rational functions in v = q^{1/2} over the rationals, plus q-numbers.

RatFunc wraps a sympy fraction-field element; sympy keeps numerator and
denominator gcd-reduced with a canonical unit, so equality is structural.
The numerator/denominator views additionally pull powers of v out of the
denominator and make its lowest coefficient 1.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Union

from scalar.errors import NotInvertible
from scalar.laurent import FIELD_V, LAURENT_FIELD, LAURENT_RING, LaurentPoly, from_qq, to_qq


class RatFunc:
    """Immutable element of Q(v)."""

    __slots__ = ("_frac",)

    def __init__(self, value=0):
        self._frac = _to_frac(value)
        if self._frac is None:
            raise TypeError(f"Cannot build a RatFunc from {type(value).__name__}")

    @classmethod
    def _wrap(cls, frac) -> "RatFunc":
        result = cls.__new__(cls)
        result._frac = frac
        return result

    @classmethod
    def from_parts(cls, numerator: LaurentPoly, denominator: LaurentPoly) -> "RatFunc":
        if denominator.is_zero:
            raise NotInvertible("RatFunc denominator is zero")
        return cls._wrap(_laurent_to_frac(numerator) / _laurent_to_frac(denominator))

    # ------------------------------------------------------------------
    # normalized views
    # ------------------------------------------------------------------
    @property
    def numerator(self) -> LaurentPoly:
        return self._parts()[0]

    @property
    def denominator(self) -> LaurentPoly:
        return self._parts()[1]

    def _parts(self):
        numer, denom = self._frac.numer, self._frac.denom
        low = min(monom[0] for monom in denom.keys())
        stripped = LaurentPoly.from_polynomial(denom, 0)
        unit = stripped.polynomial[(0,)]
        return (LaurentPoly.from_polynomial(numer.quo_ground(unit), -low),
                LaurentPoly.from_polynomial(stripped.polynomial.quo_ground(unit), 0))

    @property
    def is_laurent(self) -> bool:
        return len(self._frac.denom) == 1

    @property
    def frac(self):
        """Underlying sympy field element."""
        return self._frac

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other):
        other = _to_frac(other)
        if other is None:
            return NotImplemented
        return RatFunc._wrap(self._frac + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _to_frac(other)
        if other is None:
            return NotImplemented
        return RatFunc._wrap(self._frac - other)

    def __rsub__(self, other):
        other = _to_frac(other)
        if other is None:
            return NotImplemented
        return RatFunc._wrap(other - self._frac)

    def __mul__(self, other):
        other = _to_frac(other)
        if other is None:
            return NotImplemented
        return RatFunc._wrap(self._frac * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _to_frac(other)
        if other is None:
            return NotImplemented
        if not other:
            raise NotInvertible("Division of a RatFunc by zero")
        return RatFunc._wrap(self._frac / other)

    def __rtruediv__(self, other):
        other = _to_frac(other)
        if other is None:
            return NotImplemented
        if not self._frac:
            raise NotInvertible("Division of a RatFunc by zero")
        return RatFunc._wrap(other / self._frac)

    def __neg__(self):
        return RatFunc._wrap(-self._frac)

    def __pow__(self, exponent: int):
        if exponent < 0 and not self._frac:
            raise NotInvertible("Negative power of zero")
        return RatFunc._wrap(self._frac ** exponent)

    def inverse(self) -> "RatFunc":
        return 1 / self

    def __eq__(self, other):
        other = _to_frac(other)
        if other is None:
            return NotImplemented
        return self._frac == other

    def __hash__(self):
        return hash(self._frac)

    def __bool__(self):
        return bool(self._frac)

    def __str__(self):
        num, den = self._parts()
        if den.is_one:
            return str(num)
        return f"({num}) / ({den})"

    def __repr__(self):
        return f"RatFunc({self})"


def _laurent_to_frac(poly: LaurentPoly):
    base = LAURENT_FIELD.new(poly.polynomial)
    if poly.shift >= 0:
        return base * FIELD_V ** poly.shift
    return base / FIELD_V ** (-poly.shift)


def _to_frac(value):
    if isinstance(value, RatFunc):
        return value._frac
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, (int, Fraction)):
        return LAURENT_FIELD.new(LAURENT_RING.ground_new(to_qq(value)))
    if isinstance(value, LaurentPoly):
        return _laurent_to_frac(value)
    if getattr(value, "field", None) == LAURENT_FIELD:
        return value
    return None


Scalarish = Union[int, Fraction, LaurentPoly, RatFunc]


def as_ratfunc(value: Scalarish) -> RatFunc:
    return value if isinstance(value, RatFunc) else RatFunc(value)


# ----------------------------------------------------------------------
# q-numbers
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def v_power(k: int) -> RatFunc:
    return RatFunc(LaurentPoly.monomial(k))


def q_power(k: int) -> RatFunc:
    """q^k = v^{2k}."""
    return v_power(2 * k)


ONE = RatFunc(1)
ZERO = RatFunc(0)
V = v_power(1)
Q = q_power(1)
Q_DIFF = Q - q_power(-1)  # q - q^{-1}


@lru_cache(maxsize=None)
def q_int(n: int) -> RatFunc:
    """[n]_q = (q^n - q^{-n}) / (q - q^{-1})."""
    return (q_power(n) - q_power(-n)) / Q_DIFF


@lru_cache(maxsize=None)
def q_factorial(n: int) -> RatFunc:
    result = ONE
    for k in range(1, n + 1):
        result = result * q_int(k)
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> RatFunc:
    if k < 0 or k > n:
        return ZERO
    return q_factorial(n) / (q_factorial(k) * q_factorial(n - k))


__all__ = [
    "RatFunc", "as_ratfunc", "v_power", "q_power", "q_int", "q_factorial", "q_binomial",
    "ONE", "ZERO", "V", "Q", "Q_DIFF", "from_qq",
]
