"""
Elements of U_q(sl2)^{(x) n}: sums of n-tuples of PBW monomials.

Products are taken slot by slot; the element of slot i commutes with every
other slot.
"""

from functools import lru_cache
from itertools import product
from typing import Sequence, Tuple

from scalar import ONE
from uqsl2.algebra import LinearCombination
from uqsl2.pbw import UNIT_MONOMIAL, PbwElement, PbwMonomial, monomial_product

TensorKey = Tuple[PbwMonomial, ...]


@lru_cache(maxsize=None)
def tensor_key_product(left: TensorKey, right: TensorKey):
    """Normal form of the product of two tensor monomials, structure constants in Q(v)."""
    per_slot = [monomial_product(a, b) for a, b in zip(left, right)]
    if all(len(slot) == 1 for slot in per_slot):
        key = tuple(slot[0][0] for slot in per_slot)
        coefficient = ONE
        for slot in per_slot:
            coefficient = coefficient * slot[0][1]
        return ((key, coefficient),)
    terms = []
    for combination in product(*per_slot):
        coefficient = ONE
        for _, c in combination:
            coefficient = coefficient * c
        terms.append((tuple(m for m, _ in combination), coefficient))
    return tuple(terms)


class TensorElement(LinearCombination):
    """Element of U_q(sl2)^{(x) arity} over Q(v)."""

    __slots__ = ("arity",)

    def __init__(self, arity: int, terms=None):
        self.arity = arity
        super().__init__(terms)
        for key in self._terms:
            if len(key) != arity:
                raise ValueError(f"Tensor key {key} does not have arity {arity}")

    def _product_terms(self, left, right):
        return tensor_key_product(left, right)

    def _like(self, terms):
        return TensorElement(self.arity, terms)

    def _compatible(self, other) -> bool:
        return type(self) is type(other) and self.arity == other.arity

    def _unit_key(self):
        return (UNIT_MONOMIAL,) * self.arity

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def identity(cls, arity: int) -> "TensorElement":
        return cls(arity, {(UNIT_MONOMIAL,) * arity: 1})

    @classmethod
    def embed(cls, element: PbwElement, slot: int, arity: int) -> "TensorElement":
        """element placed at slot (1-based), units elsewhere."""
        if not 1 <= slot <= arity:
            raise ValueError(f"Slot {slot} outside 1..{arity}")
        prefix = (UNIT_MONOMIAL,) * (slot - 1)
        suffix = (UNIT_MONOMIAL,) * (arity - slot)
        return cls(arity, {prefix + (m,) + suffix: c for m, c in element.terms.items()})

    @classmethod
    def tensor(cls, *factors) -> "TensorElement":
        """Tensor product of PbwElements and TensorElements, in order."""
        keys = {(): ONE}
        for factor in factors:
            if isinstance(factor, PbwElement):
                items = [((m,), c) for m, c in factor.terms.items()]
            else:
                items = list(factor.terms.items())
            keys = {k1 + k2: c1 * c2 for k1, c1 in keys.items() for k2, c2 in items}
        arity = len(next(iter(keys))) if keys else sum(
            1 if isinstance(f, PbwElement) else f.arity for f in factors)
        return cls(arity, keys)

    # ------------------------------------------------------------------
    # structure
    # ------------------------------------------------------------------
    def support(self) -> Tuple[int, ...]:
        """1-based slots carrying a non-unit monomial in some term."""
        return tuple(i + 1 for i in range(self.arity)
                     if any(key[i] != UNIT_MONOMIAL for key in self._terms))

    def slot_element(self) -> PbwElement:
        """The PbwElement of an arity-1 tensor."""
        if self.arity != 1:
            raise ValueError("slot_element needs arity 1")
        return PbwElement({key[0]: c for key, c in self._terms.items()})

    def apply_slotwise(self, maps: Sequence):
        """
        Apply one linear map per slot, each sending a PbwMonomial to a TensorElement;
        the result is the tensor product of the images, summed with coefficients.
        """
        total = None
        for key, coefficient in self._terms.items():
            pieces = [maps[i](monomial) for i, monomial in enumerate(key)]
            term = TensorElement.tensor(*pieces) * coefficient
            total = term if total is None else total + term
        if total is None:
            arity = sum(m(UNIT_MONOMIAL).arity for m in maps)
            return TensorElement(arity)
        return total

    def __repr__(self):
        return f"TensorElement(arity={self.arity}, {len(self._terms)} terms)"

    def __str__(self):
        from uqsl2.grammar import format_element
        return format_element(self)
