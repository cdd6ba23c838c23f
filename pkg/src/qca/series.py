"""
Truncated exponential series exp(tV)(u) = sum_k t^k V^k(u) / k! and the closed
forms they are compared with on U_eps (one slot).

The closed forms use the generalized binomial series (1 + s)^alpha and

    psi_alpha(s) = ((1 - s)^alpha - 1) / s = sum_{m >= 0} (-1)^{m+1} binom(alpha, m+1) s^m.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Sequence, Tuple

from common.logging_utils import get_logger
from uqsl2 import E, F, K, K_INV, casimir
from rootcenter import EpsTensorElement, as_root, slot_coordinates, specialize_element
from qca.derivations import DerivationValue, script_triple

logger = get_logger("qca")


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 t + ... + c_N t^N with coefficients in U_eps^{(x) n}."""

    coefficients: Tuple[EpsTensorElement, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> EpsTensorElement:
        return self.coefficients[k]

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order != other.order:
            raise ValueError(f"Series orders differ: {self.order} and {other.order}")
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def as_dict(self) -> Dict[str, EpsTensorElement]:
        return {f"t^{k}": c for k, c in enumerate(self.coefficients)}

    def __str__(self):
        parts = [f"({c})*t^{k}" for k, c in enumerate(self.coefficients) if c]
        return " + ".join(parts) if parts else "0"


def exp_series(derivation: DerivationValue, u, order: int) -> TruncatedSeries:
    """exp(tV)(u) truncated after t^order."""
    if order < 0:
        raise ValueError(f"Series order must be nonnegative, got {order}")
    current = u if isinstance(u, EpsTensorElement) else specialize_element(u, derivation.l)
    coefficients = [current]
    for k in range(1, order + 1):
        current = derivation(current)
        coefficients.append(current / factorial(k))
        logger.debug(f"exp(t{derivation.name}): t^{k} coefficient has {len(current)} terms")
    return TruncatedSeries(tuple(coefficients))


def generalized_binomial(alpha: Fraction, k: int) -> Fraction:
    """alpha (alpha - 1) ... (alpha - k + 1) / k!."""
    value = Fraction(1)
    for j in range(k):
        value *= (alpha - j)
    return value / factorial(k)


def psi_coefficient(alpha: Fraction, m: int) -> Fraction:
    """Coefficient of s^m in psi_alpha(s)."""
    return (-1) ** (m + 1) * generalized_binomial(alpha, m + 1)


def binomial_series(alpha: Fraction, s: EpsTensorElement, factor: EpsTensorElement,
                    order: int) -> TruncatedSeries:
    """(1 - t s)^alpha factor, truncated."""
    coefficients, power = [], factor
    for k in range(order + 1):
        coefficients.append(power * (generalized_binomial(alpha, k) * (-1) ** k))
        power = s * power
    return TruncatedSeries(tuple(coefficients))


def polynomial_series(coefficients: Sequence[EpsTensorElement], order: int) -> TruncatedSeries:
    zero = coefficients[0] * 0
    padded = list(coefficients[:order + 1]) + [zero] * (order + 1 - len(coefficients))
    return TruncatedSeries(tuple(padded))


# ----------------------------------------------------------------------
# closed forms on U_eps
# ----------------------------------------------------------------------
def _constants(l: int):
    root = as_root(l)
    eps = root.eps
    coordinates = slot_coordinates(1, l)
    x, y, z, z_inv = (coordinates[name] for name in ("x1", "y1", "z1", "z_inv1"))
    return eps, eps - eps ** -1, x, y, z, z_inv


def _psi_tail(l: int, s: EpsTensorElement, left: EpsTensorElement, right: EpsTensorElement,
              tail: EpsTensorElement, scale, order: int) -> TruncatedSeries:
    """
    u0 + scale * (left t z psi_{-1/l}(t s) + right t z psi_{1/l}(t s)) tail, without u0;
    the t^0 coefficient is zero.
    """
    _, _, _, _, z, _ = _constants(l)
    alpha = Fraction(1, l)
    coefficients = [tail * 0]
    power = EpsTensorElement.identity(1, l)
    for k in range(1, order + 1):
        m = k - 1
        bracket = left * psi_coefficient(-alpha, m) + right * psi_coefficient(alpha, m)
        coefficients.append(bracket * z * power * tail * scale)
        power = power * s
    return TruncatedSeries(tuple(coefficients))


def _plus(first: TruncatedSeries, second: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(tuple(a + b for a, b in zip(first.coefficients, second.coefficients)))


def _at_eps(element, l: int) -> EpsTensorElement:
    return specialize_element(element, l)


def closed_exp_f(name: str, l: int, order: int) -> Tuple[EpsTensorElement, TruncatedSeries]:
    """(u, exp(tF)(u)) for u in K, K_INV, F, E and the coordinates x, y, z and Omega."""
    eps, c_diff, x, y, z, z_inv = _constants(l)
    yz = y * z
    alpha = Fraction(1, l)
    if name == "K":
        u = _at_eps(K, l)
        return u, binomial_series(-alpha, yz, u, order)
    if name == "K_INV":
        u = _at_eps(K_INV, l)
        return u, binomial_series(alpha, yz, u, order)
    if name == "F":
        u = _at_eps(F, l)
        return u, polynomial_series([u], order)
    if name == "E":
        u = _at_eps(E, l)
        tail = _psi_tail(l, yz, _at_eps(K, l) * eps ** -1, _at_eps(K_INV, l) * eps,
                         _at_eps(F ** (l - 1), l), -(c_diff ** (l - 2)), order)
        return u, _plus(polynomial_series([u], order), tail)
    return _closed_center("F", name, l, order)


def closed_exp_e(name: str, l: int, order: int) -> Tuple[EpsTensorElement, TruncatedSeries]:
    """(u, exp(tE)(u)) for u in K, K_INV, K_INV E, F K and the coordinates x, y, z and Omega."""
    eps, c_diff, x, y, z, z_inv = _constants(l)
    xz = x * z
    alpha = Fraction(1, l)
    if name == "K":
        u = _at_eps(K, l)
        return u, binomial_series(-alpha, xz, u, order)
    if name == "K_INV":
        u = _at_eps(K_INV, l)
        return u, binomial_series(alpha, xz, u, order)
    if name == "K_INV E":
        u = _at_eps(K_INV * E, l)
        return u, polynomial_series([u], order)
    if name == "F K":
        u = _at_eps(F * K, l)
        tail = _psi_tail(l, xz, _at_eps(K, l) * eps, _at_eps(K_INV, l) * eps ** -1,
                         _at_eps((K_INV * E) ** (l - 1), l), c_diff ** (l - 2), order)
        return u, _plus(polynomial_series([u], order), tail)
    return _closed_center("E", name, l, order)


def _closed_center(direction: str, name: str, l: int, order: int):
    _, _, x, y, z, z_inv = _constants(l)
    middle = z - x * y * z - z_inv
    if name == "omega":
        u = _at_eps(casimir(), l)
        return u, polynomial_series([u], order)
    own, other = (x, y) if direction == "E" else (y, x)
    if name == ("x" if direction == "E" else "y"):
        return own, polynomial_series([own], order)
    if name == ("y" if direction == "E" else "x"):
        return other, polynomial_series([other, middle, own], order)
    if name == "z":
        # (1 - t z own)^{-1} z
        return z, binomial_series(Fraction(-1), z * own, z, order)
    raise ValueError(f"No closed form of exp(t{direction}) on '{name}'")


CLOSED_FORMS: Dict[str, Callable] = {"E": closed_exp_e, "F": closed_exp_f}
SERIES_TARGETS = {
    "E": ("K", "K_INV", "K_INV E", "F K", "x", "y", "z", "omega"),
    "F": ("K", "K_INV", "F", "E", "x", "y", "z", "omega"),
}


def series_residual(direction: str, name: str, l: int, order: int) -> Dict[str, EpsTensorElement]:
    """exp(tV)(u) minus its closed form, coefficient by coefficient."""
    u, expected = CLOSED_FORMS[direction](name, l, order)
    computed = exp_series(script_triple(1, l)[direction], u, order)
    return (computed - expected).as_dict()
