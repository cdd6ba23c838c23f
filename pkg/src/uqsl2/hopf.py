"""
Hopf structure of U_q(sl2) and algebra maps defined on generators.

    Delta(E) = E (x) K + 1 (x) E      S(E) = -E K^{-1}      counit(E) = 0
    Delta(F) = K^{-1} (x) F + F (x) 1 S(F) = -K F           counit(F) = 0
    Delta(K) = K (x) K                S(K) = K^{-1}         counit(K) = 1

Omega = q K + q^{-1} K^{-1} + (q - q^{-1})^2 F E is central.
"""

from functools import lru_cache
from typing import Callable, Mapping

from scalar import ONE, Q, Q_DIFF, ZERO, RatFunc, q_power
from uqsl2.pbw import E, F, K, K_INV, UNIT, PbwElement, PbwMonomial, k_power
from uqsl2.tensor import TensorElement


def _monomial_image(monomial: PbwMonomial, images: Mapping[str, object], anti: bool = False):
    """Image of F^a K^b E^c under the (anti)morphism fixed by the generator images."""
    a, b, c = monomial
    f_part = images["F"] ** a
    k_part = images["K"] ** b if b >= 0 else images["K_INV"] ** (-b)
    e_part = images["E"] ** c
    if anti:
        return e_part * k_part * f_part
    return f_part * k_part * e_part


def apply_algebra_map(u: PbwElement, images: Mapping[str, object], anti: bool = False):
    """
    Extend generator images {E, F, K, K_INV} to an algebra (anti)morphism and apply it to u.

    The images may live in any algebra built on LinearCombination; K and K_INV must be
    mutually inverse there for the result to be well defined.
    """
    total = None
    for monomial, coefficient in u.terms.items():
        term = _monomial_image(monomial, images, anti) * coefficient
        total = term if total is None else total + term
    if total is None:
        return images["K"] * 0
    return total


# ----------------------------------------------------------------------
# coproduct
# ----------------------------------------------------------------------
def _one_slot(element: PbwElement) -> TensorElement:
    return TensorElement.embed(element, 1, 1)


@lru_cache(maxsize=None)
def iterated_generator_images(arity: int):
    """Delta^{(arity-1)} of E, F, K, K^{-1} as TensorElements."""
    if arity < 1:
        raise ValueError(f"Arity must be positive, got {arity}")
    e_image = TensorElement(arity)
    f_image = TensorElement(arity)
    for i in range(arity):
        e_image = e_image + TensorElement.tensor(*([UNIT] * i + [E] + [K] * (arity - i - 1)))
        f_image = f_image + TensorElement.tensor(*([K_INV] * i + [F] + [UNIT] * (arity - i - 1)))
    return {
        "E": e_image,
        "F": f_image,
        "K": TensorElement.tensor(*([K] * arity)),
        "K_INV": TensorElement.tensor(*([K_INV] * arity)),
    }


@lru_cache(maxsize=None)
def _monomial_coproduct(monomial: PbwMonomial, arity: int) -> TensorElement:
    if arity == 1:
        return TensorElement(1, {(monomial,): ONE})
    return _monomial_image(monomial, iterated_generator_images(arity))


def coproduct_iterated(u: PbwElement, arity: int) -> TensorElement:
    """Delta^{(arity-1)}(u) in U_q^{(x) arity}; arity 1 is the identity embedding."""
    total = TensorElement(arity)
    for monomial, coefficient in u.terms.items():
        total = total + _monomial_coproduct(monomial, arity) * coefficient
    return total


def coproduct(u: PbwElement) -> TensorElement:
    return coproduct_iterated(u, 2)


def coproduct_opposite(u: PbwElement) -> TensorElement:
    """Delta^cop(u): the coproduct with its two legs swapped."""
    flipped = {(right, left): c for (left, right), c in coproduct(u).terms.items()}
    return TensorElement(2, flipped)


def coproduct_at(t: TensorElement, slot: int, arity: int = 2) -> TensorElement:
    """Apply Delta^{(arity-1)} to the given slot (1-based) of t; the result has t.arity + arity - 1 legs."""
    if not 1 <= slot <= t.arity:
        raise ValueError(f"Slot {slot} outside 1..{t.arity}")

    def slot_map(index: int) -> Callable[[PbwMonomial], TensorElement]:
        if index == slot - 1:
            return lambda monomial: _monomial_coproduct(monomial, arity)
        return lambda monomial: TensorElement(1, {(monomial,): ONE})

    return t.apply_slotwise([slot_map(i) for i in range(t.arity)])


# ----------------------------------------------------------------------
# antipode and counit
# ----------------------------------------------------------------------
ANTIPODE_IMAGES = {
    "E": -(E * K_INV),
    "F": -(K * F),
    "K": K_INV,
    "K_INV": K,
}


def antipode(u: PbwElement) -> PbwElement:
    return apply_algebra_map(u, ANTIPODE_IMAGES, anti=True)


def counit(u: PbwElement) -> RatFunc:
    total = ZERO
    for monomial, coefficient in u.terms.items():
        if monomial.f_exp == 0 and monomial.e_exp == 0:
            total = total + coefficient
    return total


def antipode_axiom_residual(u: PbwElement) -> PbwElement:
    """m (S (x) id) Delta(u) - counit(u) 1, zero for every u."""
    total = PbwElement()
    for (left, right), coefficient in coproduct(u).terms.items():
        left_part = antipode(PbwElement({left: ONE}))
        total = total + left_part * PbwElement({right: coefficient})
    return total - UNIT * counit(u)


def multiply_legs(t: TensorElement) -> PbwElement:
    """m^{(n-1)}: multiply the legs of t together in order."""
    total = PbwElement()
    for key, coefficient in t.terms.items():
        product = UNIT
        for monomial in key:
            product = product * PbwElement({monomial: ONE})
        total = total + product * coefficient
    return total


def coassociativity_residual(u: PbwElement) -> TensorElement:
    """(Delta (x) id) Delta(u) - (id (x) Delta) Delta(u)."""
    once = coproduct(u)
    return coproduct_at(once, 1) - coproduct_at(once, 2)


# ----------------------------------------------------------------------
# distinguished elements and automorphisms
# ----------------------------------------------------------------------
def casimir() -> PbwElement:
    """Omega = q K + q^{-1} K^{-1} + (q - q^{-1})^2 F E."""
    return K * Q + K_INV * q_power(-1) + F * E * (Q_DIFF * Q_DIFF)


def tau_images(r: int):
    """tau_r: K -> K, E -> K^r E, F -> F K^{-r}."""
    return {"E": k_power(r) * E, "F": F * k_power(-r), "K": K, "K_INV": K_INV}


def braid_images(r: int):
    """T_r: K -> K^{-1}, E -> -F K^{-r}, F -> -K^r E."""
    return {"E": -(F * k_power(-r)), "F": -(k_power(r) * E), "K": K_INV, "K_INV": K}


def tau(u: PbwElement, r: int) -> PbwElement:
    return apply_algebra_map(u, tau_images(r))


def braid(u: PbwElement, r: int) -> PbwElement:
    return apply_algebra_map(u, braid_images(r))


def relation_residuals(images: Mapping[str, object]):
    """
    Defining relations of U_q(sl2) evaluated on candidate generator images.

    Returns name -> residual; every residual is zero exactly when the images
    define an algebra map.
    """
    e, f, k, k_inv = images["E"], images["F"], images["K"], images["K_INV"]
    one = k * k_inv
    return {
        "K K^-1 = 1": one - 1,
        "K^-1 K = 1": k_inv * k - 1,
        "K E = q^2 E K": k * e - e * k * q_power(2),
        "K F = q^-2 F K": k * f - f * k * q_power(-2),
        "E F - F E = [K;0]": (e * f - f * e) * Q_DIFF - (k - k_inv),
    }
