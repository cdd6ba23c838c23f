"""
Finite linear combinations of basis keys with exact coefficients.

Subclasses fix the key type, the product of two keys (as a list of keys with
structure constants in Q(v)) and the coefficient ring. The structure constants
of U_q(sl2) are rational functions of v; subclasses over a cyclotomic field
convert them by specialization.
"""

from collections import defaultdict
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, Hashable, Iterable, Mapping, Tuple

from scalar import LaurentPoly, RatFunc

ScalarTypes = (int, Fraction, LaurentPoly, RatFunc)


class LinearCombination:
    """Immutable sum of coefficient * key, zero coefficients never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, Any] = None):
        cleaned = {}
        for key, coefficient in (terms or {}).items():
            coefficient = self._scalar(coefficient)
            if coefficient:
                cleaned[key] = coefficient
        self._terms = cleaned

    # ------------------------------------------------------------------
    # hooks
    # ------------------------------------------------------------------
    def _scalar(self, value):
        """Convert a scalar into the coefficient ring (RatFunc by default)."""
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, ScalarTypes):
            return RatFunc(value)
        raise TypeError(f"Unsupported coefficient {value!r}")

    def _structure(self, value: RatFunc):
        """Convert a structure constant of the key product into the coefficient ring."""
        return value

    def _product_terms(self, left, right) -> Iterable[Tuple[Hashable, RatFunc]]:
        raise NotImplementedError

    def _like(self, terms: Mapping[Hashable, Any]):
        """New element of the same kind (same arity, same point) with the given terms."""
        raise NotImplementedError

    def _compatible(self, other) -> bool:
        return type(self) is type(other)

    def _is_scalar(self, value) -> bool:
        return isinstance(value, ScalarTypes)

    # ------------------------------------------------------------------
    # views
    # ------------------------------------------------------------------
    @property
    def terms(self) -> Mapping[Hashable, Any]:
        return MappingProxyType(self._terms)

    def coefficient(self, key):
        return self._terms.get(key, self._scalar(0))

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items(), key=lambda item: item[0]))

    def __bool__(self):
        return bool(self._terms)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def _unit_key(self):
        raise NotImplementedError

    def scalar_element(self, value):
        return self._like({self._unit_key(): value})

    def _coerce(self, other):
        if isinstance(other, LinearCombination):
            if not self._compatible(other):
                raise TypeError(f"Cannot combine {self!r} with {other!r}")
            return other
        if self._is_scalar(other):
            return self.scalar_element(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged: Dict[Hashable, Any] = dict(self._terms)
        for key, coefficient in other._terms.items():
            merged[key] = merged[key] + coefficient if key in merged else coefficient
        return self._like(merged)

    __radd__ = __add__

    def __neg__(self):
        return self._like({key: -c for key, c in self._terms.items()})

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

    def scale(self, value):
        value = self._scalar(value)
        if not value:
            return self._like({})
        return self._like({key: c * value for key, c in self._terms.items()})

    def __mul__(self, other):
        if self._is_scalar(other):
            return self.scale(other)
        if not isinstance(other, LinearCombination):
            return NotImplemented
        if not self._compatible(other):
            raise TypeError(f"Cannot multiply {self!r} by {other!r}")
        accumulated: Dict[Hashable, Any] = defaultdict(lambda: self._scalar(0))
        for left, c1 in self._terms.items():
            for right, c2 in other._terms.items():
                weight = c1 * c2
                for key, structure in self._product_terms(left, right):
                    accumulated[key] = accumulated[key] + weight * self._structure(structure)
        return self._like(accumulated)

    def __rmul__(self, other):
        if self._is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if self._is_scalar(other):
            return self.scale(1 / self._scalar(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative powers are not defined for algebra elements")
        result = self.scalar_element(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))


def commutator(a, b):
    """[a, b] = ab - ba."""
    return a * b - b * a
