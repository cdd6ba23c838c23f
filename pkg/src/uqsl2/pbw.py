"""
U_q(sl2) in the PBW basis F^a K^b E^c.

Relations: K E K^{-1} = q^2 E, K F K^{-1} = q^{-2} F,
E F - F E = (K - K^{-1}) / (q - q^{-1}).

Products are straightened with

    E F^a = F^a E + [a] F^{a-1} (q^{-(a-1)} K - q^{a-1} K^{-1}) / (q - q^{-1})

applied recursively to E^c F^a; the resulting table is memoized when
config.straighten_memo is set (results are identical either way).
"""

from functools import lru_cache
from typing import Dict, NamedTuple, Tuple

from scalar import ONE, Q_DIFF, RatFunc, q_int, q_power
from uqsl2.algebra import LinearCombination
from uqsl2.configs.uqsl2_config import config


class PbwMonomial(NamedTuple):
    """F^f_exp K^k_exp E^e_exp; tuple order gives the lexicographic order on (a, b, c)."""

    f_exp: int
    k_exp: int
    e_exp: int

    @property
    def degree(self) -> int:
        return self.f_exp + abs(self.k_exp) + self.e_exp

    def __str__(self):
        return f"F^{self.f_exp} K^{self.k_exp} E^{self.e_exp}"


UNIT_MONOMIAL = PbwMonomial(0, 0, 0)

Terms = Tuple[Tuple[PbwMonomial, RatFunc], ...]


def _straighten(c: int, a: int) -> Terms:
    """E^c F^a in normal form."""
    if c == 0 or a == 0:
        return ((PbwMonomial(a, 0, c), ONE),)
    result: Dict[PbwMonomial, RatFunc] = {}

    def add(monomial, coefficient):
        total = result.get(monomial, 0) + coefficient
        if total:
            result[monomial] = total
        else:
            result.pop(monomial, None)

    # E^{c-1} F^a E
    for (x, y, z), coefficient in straighten(c - 1, a):
        add(PbwMonomial(x, y, z + 1), coefficient)
    # [a]/(q - q^{-1}) E^{c-1} F^{a-1} (q^{-(a-1)} K - q^{a-1} K^{-1})
    factor = q_int(a) / Q_DIFF
    for (x, y, z), coefficient in straighten(c - 1, a - 1):
        base = coefficient * factor
        add(PbwMonomial(x, y + 1, z), base * q_power(-(a - 1) - 2 * z))
        add(PbwMonomial(x, y - 1, z), -base * q_power((a - 1) + 2 * z))
    return tuple(sorted(result.items()))


_straighten_memo = lru_cache(maxsize=None)(_straighten)


def straighten(c: int, a: int) -> Terms:
    return _straighten_memo(c, a) if config.straighten_memo else _straighten(c, a)


def _monomial_product(left: PbwMonomial, right: PbwMonomial) -> Terms:
    a, b, c = left
    a2, b2, c2 = right
    if c == 0 or a2 == 0:
        # no E-F straightening needed
        scale = q_power(-2 * b * a2 - 2 * b2 * c)
        return ((PbwMonomial(a + a2, b + b2, c + c2), scale),)
    terms = []
    for (x, y, z), coefficient in straighten(c, a2):
        # K^b F^x = q^{-2bx} F^x K^b and E^z K^b2 = q^{-2 b2 z} K^b2 E^z
        terms.append((PbwMonomial(a + x, b + y + b2, z + c2),
                      coefficient * q_power(-2 * b * x - 2 * b2 * z)))
    return tuple(terms)


_product_memo = lru_cache(maxsize=None)(_monomial_product)


def monomial_product(left: PbwMonomial, right: PbwMonomial) -> Terms:
    """Normal form of the product of two PBW monomials."""
    return _product_memo(left, right) if config.straighten_memo else _monomial_product(left, right)


class PbwElement(LinearCombination):
    """Element of U_q(sl2) over Q(v) in PBW normal form."""

    __slots__ = ()

    def _product_terms(self, left, right):
        return monomial_product(left, right)

    def _like(self, terms):
        return PbwElement(terms)

    def _unit_key(self):
        return UNIT_MONOMIAL

    @classmethod
    def monomial(cls, f_exp: int = 0, k_exp: int = 0, e_exp: int = 0, coefficient=1) -> "PbwElement":
        if f_exp < 0 or e_exp < 0:
            raise ValueError(f"E and F exponents must be nonnegative, got F^{f_exp} E^{e_exp}")
        return cls({PbwMonomial(f_exp, k_exp, e_exp): coefficient})

    @classmethod
    def scalar(cls, value) -> "PbwElement":
        return cls({UNIT_MONOMIAL: value})

    def max_degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def __repr__(self):
        return f"PbwElement({len(self._terms)} terms)"

    def __str__(self):
        from uqsl2.grammar import format_element
        return format_element(self)


E = PbwElement.monomial(e_exp=1)
F = PbwElement.monomial(f_exp=1)
K = PbwElement.monomial(k_exp=1)
K_INV = PbwElement.monomial(k_exp=-1)
UNIT = PbwElement.scalar(1)


def k_power(exponent: int) -> PbwElement:
    return PbwElement.monomial(k_exp=exponent)


def q_bracket_k(r: int) -> PbwElement:
    """[K; r] = (K q^r - K^{-1} q^{-r}) / (q - q^{-1})."""
    return (K * q_power(r) - K_INV * q_power(-r)) / Q_DIFF


def normal_form_product(u: PbwElement, w: PbwElement) -> PbwElement:
    """The product u * w, straightened into the PBW basis."""
    return u * w
