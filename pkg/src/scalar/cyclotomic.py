"""
Cyclotomic fields Q[x]/Phi_{4l}(x) and specialization of rational functions.

For odd l >= 3 the class of x is a primitive 4l-th root of unity. The
distinguished constants are

    eps       = x^4            primitive l-th root of unity
    sqrt_eps  = eps^{(l+1)/2}  squares to eps, again of order l
    i         = x^l            squares to -1
    zeta      = i * sqrt_eps   zeta^2 = -eps

Specializing v = q^{1/2} at sqrt_eps sends q to eps.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from common.logging_utils import get_logger
from scalar.configs.scalar_config import config
from scalar.errors import NotInvertible, PoleAtSpecialization
from scalar.laurent import LaurentPoly, from_qq, to_qq
from scalar.ratfunc import RatFunc, as_ratfunc, q_binomial

logger = get_logger("scalar")

CYCLOTOMIC_RING, _X = ring("x", QQ)


@lru_cache(maxsize=None)
def _cyclotomic_poly(m: int):
    """Phi_m by exact division of x^m - 1 by Phi_d for the proper divisors d of m."""
    if m < 1:
        raise ValueError(f"Cyclotomic index must be positive, got {m}")
    poly = _X ** m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = poly.exquo(_cyclotomic_poly(d))
    return poly


def cyclotomic_polynomial(m: int) -> LaurentPoly:
    """Phi_m as a LaurentPoly (the variable is read as v)."""
    return LaurentPoly({monom[0]: from_qq(c) for monom, c in _cyclotomic_poly(m).items()})


class Cyclotomic:
    """Immutable residue class in Q[x]/Phi_order(x)."""

    __slots__ = ("order", "_poly", "_x_exp")

    def __init__(self, order: int, value: Union[int, Fraction, Tuple] = 0):
        self.order = order
        modulus = _cyclotomic_poly(order)
        if isinstance(value, (tuple, list)):
            poly = CYCLOTOMIC_RING.from_dict({(k,): to_qq(c) for k, c in enumerate(value) if c})
        else:
            poly = CYCLOTOMIC_RING.ground_new(to_qq(value))
        self._poly = poly.rem(modulus)
        self._x_exp = None

    @classmethod
    def _from_poly(cls, order: int, poly, x_exp=None) -> "Cyclotomic":
        result = cls.__new__(cls)
        result.order = order
        result._poly = poly.rem(_cyclotomic_poly(order))
        result._x_exp = x_exp
        return result

    @classmethod
    def x_power(cls, order: int, exponent: int) -> "Cyclotomic":
        exponent %= order
        return cls._from_poly(order, _X ** exponent, exponent)

    # ------------------------------------------------------------------
    # views
    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        return _cyclotomic_poly(self.order).degree()

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        values = [Fraction(0)] * self.degree
        for monom, c in self._poly.items():
            values[monom[0]] = from_qq(c)
        return tuple(values)

    @property
    def monomial_exponent(self):
        """k if this element was built as a power of x, else None."""
        if self._x_exp is not None:
            return self._x_exp
        if len(self._poly) == 1:
            (monom, c), = self._poly.items()
            if c == 1:
                return monom[0]
        return None

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError(f"Mixing cyclotomic orders {self.order} and {other.order}")
            return other._poly
        if isinstance(other, bool):
            other = int(other)
        if isinstance(other, (int, Fraction)):
            return CYCLOTOMIC_RING.ground_new(to_qq(other))
        return None

    def __add__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return Cyclotomic._from_poly(self.order, self._poly + poly)

    __radd__ = __add__

    def __sub__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return Cyclotomic._from_poly(self.order, self._poly - poly)

    def __rsub__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return Cyclotomic._from_poly(self.order, poly - self._poly)

    def __neg__(self):
        return Cyclotomic._from_poly(self.order, -self._poly)

    def __mul__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        if isinstance(other, Cyclotomic) and self._x_exp is not None and other._x_exp is not None:
            return Cyclotomic.x_power(self.order, self._x_exp + other._x_exp)
        return Cyclotomic._from_poly(self.order, self._poly * poly)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self._poly:
            raise NotInvertible(f"Zero has no inverse in Q[x]/Phi_{self.order}")
        s, _, h = self._poly.gcdex(_cyclotomic_poly(self.order))
        if h.degree() > 0:
            raise NotInvertible(f"{self} is a zero divisor modulo Phi_{self.order}")
        return Cyclotomic._from_poly(self.order, s.quo_ground(h.LC))

    def __truediv__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return self * Cyclotomic._from_poly(self.order, poly).inverse()

    def __rtruediv__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return Cyclotomic._from_poly(self.order, poly) * self.inverse()

    def __pow__(self, exponent: int):
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        exp_of_x = base.monomial_exponent
        if exp_of_x is not None:
            return Cyclotomic.x_power(self.order, exp_of_x * exponent)
        result = Cyclotomic(self.order, 1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self._poly == other._poly
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return self._poly == poly

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return bool(self._poly)

    def __str__(self):
        if not self._poly:
            return "0"
        terms = sorted((monom[0], from_qq(c)) for monom, c in self._poly.items())
        return " + ".join(f"{c}*x^{k}" for k, c in terms)

    def __repr__(self):
        return f"Cyclotomic(order={self.order}, {self})"


@dataclass(frozen=True)
class RootOfUnity:
    """Distinguished constants of Q[x]/Phi_{4l}."""

    l: int

    def __post_init__(self):
        if self.l < 3 or self.l % 2 == 0:
            raise ValueError(f"l must be odd and at least 3, got {self.l}")

    @property
    def order(self) -> int:
        return 4 * self.l

    @cached_property
    def eps(self) -> Cyclotomic:
        return Cyclotomic.x_power(self.order, 4)

    @cached_property
    def sqrt_eps(self) -> Cyclotomic:
        return Cyclotomic.x_power(self.order, 2 * (self.l + 1))

    @cached_property
    def i(self) -> Cyclotomic:
        return Cyclotomic.x_power(self.order, self.l)

    @cached_property
    def zeta(self) -> Cyclotomic:
        return self.i * self.sqrt_eps

    @property
    def point(self) -> Cyclotomic:
        """Value of v = q^{1/2}."""
        return self.sqrt_eps

    def scalar(self, value) -> Cyclotomic:
        return Cyclotomic(self.order, value)


@lru_cache(maxsize=None)
def root_of_unity(l: int) -> RootOfUnity:
    return RootOfUnity(l)


def evaluate_laurent(poly: LaurentPoly, point: Cyclotomic) -> Cyclotomic:
    """Evaluate a Laurent polynomial in v at a cyclotomic point."""
    exponent = point.monomial_exponent
    if exponent is not None:
        gathered: Dict[int, Fraction] = defaultdict(Fraction)
        for k, c in poly.coefficients.items():
            gathered[(exponent * k) % point.order] += c
        return Cyclotomic._from_poly(
            point.order,
            CYCLOTOMIC_RING.from_dict({(k,): to_qq(c) for k, c in gathered.items() if c}),
        )
    total = Cyclotomic(point.order, 0)
    for k, c in poly.coefficients.items():
        total = total + c * point ** k
    return total


def _specialize(f: RatFunc, point: Cyclotomic) -> Cyclotomic:
    numerator, denominator = f.numerator, f.denominator
    if denominator.is_one:
        return evaluate_laurent(numerator, point)
    den_value = evaluate_laurent(denominator, point)
    if not den_value:
        raise PoleAtSpecialization(f, point)
    return evaluate_laurent(numerator, point) * den_value.inverse()


_specialize_memo = (lru_cache(maxsize=config.specialize_memo_size)(_specialize)
                    if config.specialize_memo_size > 0 else _specialize)


def specialize(f, point: Cyclotomic) -> Cyclotomic:
    """
    Evaluate a rational function in v at a cyclotomic point.

    Raises:
        PoleAtSpecialization: if the reduced denominator vanishes at the point
    """
    return _specialize_memo(as_ratfunc(f), point)


def q_binomial_vanishes(l: int) -> bool:
    """Check that [l choose k]_q vanishes at q = eps for 0 < k < l."""
    point = root_of_unity(l).point
    for k in range(1, l):
        value = specialize(q_binomial(l, k), point)
        if value:
            logger.warning(f"[{l} choose {k}] does not vanish at eps: {value}")
            return False
    return True
