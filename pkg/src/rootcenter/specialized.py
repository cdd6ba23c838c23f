"""
U_eps^{(x) n}: tensor PBW elements with coefficients in Q[x]/Phi_{4l}.

Structure constants of the PBW product are computed over Q(v) and specialized
at v = eps^{1/2}, so an EpsTensorElement multiplies exactly like the image of a
TensorElement whose coefficients are regular at eps.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Union

from common.logging_utils import get_logger
from scalar import (
    Cyclotomic, LaurentPoly, PoleAtSpecialization, Q_DIFF, RatFunc, RootOfUnity, root_of_unity,
    specialize,
)
from uqsl2 import E, F, K_INV, LinearCombination, PbwElement, TensorElement, k_power, tensor_key_product
from uqsl2.pbw import UNIT_MONOMIAL

logger = get_logger("rootcenter")

RootLike = Union[int, RootOfUnity]

_SCALARS = (int, Fraction, LaurentPoly, RatFunc, Cyclotomic)


def as_root(root: RootLike) -> RootOfUnity:
    return root if isinstance(root, RootOfUnity) else root_of_unity(root)


class EpsTensorElement(LinearCombination):
    """Element of U_eps^{(x) arity}."""

    __slots__ = ("arity", "root")

    def __init__(self, arity: int, root: RootLike, terms=None):
        self.arity = arity
        self.root = as_root(root)
        super().__init__(terms)

    def _scalar(self, value):
        if isinstance(value, Cyclotomic):
            if value.order != self.root.order:
                raise ValueError(f"Coefficient lives in Q[x]/Phi_{value.order}, "
                                 f"expected Phi_{self.root.order}")
            return value
        if isinstance(value, (RatFunc, LaurentPoly)):
            return specialize(value, self.root.point)
        if isinstance(value, (int, Fraction)):
            return Cyclotomic(self.root.order, value)
        raise TypeError(f"Unsupported coefficient {value!r}")

    def _structure(self, value: RatFunc):
        return specialize(value, self.root.point)

    def _product_terms(self, left, right):
        return tensor_key_product(left, right)

    def _like(self, terms):
        return EpsTensorElement(self.arity, self.root, terms)

    def _compatible(self, other) -> bool:
        return (type(self) is type(other) and self.arity == other.arity
                and self.root.l == other.root.l)

    def _is_scalar(self, value) -> bool:
        return isinstance(value, _SCALARS)

    def _unit_key(self):
        return (UNIT_MONOMIAL,) * self.arity

    @classmethod
    def identity(cls, arity: int, root: RootLike) -> "EpsTensorElement":
        return cls(arity, root, {(UNIT_MONOMIAL,) * arity: 1})

    def support(self):
        return tuple(i + 1 for i in range(self.arity)
                     if any(key[i] != UNIT_MONOMIAL for key in self._terms))

    def __repr__(self):
        return f"EpsTensorElement(arity={self.arity}, l={self.root.l}, {len(self._terms)} terms)"

    def __str__(self):
        from uqsl2.grammar import format_element
        return format_element(self)


def specialize_element(t, root: RootLike) -> EpsTensorElement:
    """
    Coefficientwise image of a TensorElement (or PbwElement, read with arity 1) at eps.

    Raises:
        PoleAtSpecialization: naming the monomial whose coefficient has a pole at eps
    """
    root = as_root(root)
    if isinstance(t, PbwElement):
        t = TensorElement.embed(t, 1, 1)
    terms = {}
    for key, coefficient in t.terms.items():
        try:
            terms[key] = specialize(coefficient, root.point)
        except PoleAtSpecialization as e:
            where = " (x) ".join(str(m) for m in key)
            raise PoleAtSpecialization(e.value, e.point, where) from e
    return EpsTensorElement(t.arity, root, terms)


def embed_at(element: PbwElement, slot: int, n: int, root: RootLike) -> EpsTensorElement:
    return specialize_element(TensorElement.embed(element, slot, n), root)


# ----------------------------------------------------------------------
# the small center Z_0
# ----------------------------------------------------------------------
def coordinate_lifts(l: int) -> Dict[str, PbwElement]:
    """
    Generic representatives of the coordinates on Z_0(U_eps):

        x = -(q - q^{-1})^l E^l K^{-l}   y = (q - q^{-1})^l F^l   z^{+-1} = K^{+-l}
    """
    scale = Q_DIFF ** l
    return {
        "x": E ** l * K_INV ** l * (-scale),
        "y": F ** l * scale,
        "z": k_power(l),
        "z_inv": k_power(-l),
    }


@lru_cache(maxsize=None)
def slot_coordinates(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """x^{(i)}, y^{(i)}, z^{(i)}, z_inv^{(i)} in U_eps^{(x) n}, keyed 'x1', ..., 'z_inv{n}'."""
    lifts = coordinate_lifts(l)
    return {f"{name}{slot}": embed_at(lift, slot, n, l)
            for slot in range(1, n + 1) for name, lift in lifts.items()}
