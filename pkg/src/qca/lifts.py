"""
Canonical q-dependent lifts of central elements of U_eps^{(x) n}.

A derivation D_a is computed from a lift of a over Q(v); the lift of each name
is fixed here:

    x = -(q - q^{-1})^l E^l K^{-l}    y = (q - q^{-1})^l F^l    z^{+-1} = K^{+-l}
    e = -x z = (q - q^{-1})^l E^l      f = -y z = -(q - q^{-1})^l F^l K^l
    omega = Omega
"""

from dataclasses import dataclass
from typing import Dict

from scalar import Q_DIFF
from uqsl2 import E, F, K, PbwElement, TensorElement, casimir, coproduct_iterated, k_power
from graphalg import loop_generators
from rootcenter import EpsTensorElement, coordinate_lifts, specialize_element

LIFT_NAMES = ("x", "y", "z", "z_inv", "e", "f", "omega")


def generic_lifts(l: int) -> Dict[str, PbwElement]:
    lifts = dict(coordinate_lifts(l))
    scale = Q_DIFF ** l
    lifts["e"] = E ** l * scale
    lifts["f"] = F ** l * k_power(l) * (-scale)
    lifts["omega"] = casimir()
    return lifts


@dataclass(frozen=True, eq=False)
class CentralLift:
    """A named central element of U_eps^{(x) arity} with its lift over Q(v)."""

    name: str
    lift: TensorElement
    l: int

    @property
    def arity(self) -> int:
        return self.lift.arity

    def at_eps(self) -> EpsTensorElement:
        return specialize_element(self.lift, self.l)

    def __str__(self):
        return self.name


def central_lift(name: str, l: int, site: int = 1, n: int = 1) -> CentralLift:
    """The lift of x, y, z, z_inv, e, f or omega placed at a slot of U^{(x) n}."""
    lifts = generic_lifts(l)
    if name not in lifts:
        raise ValueError(f"Unknown central element '{name}', expected one of {', '.join(LIFT_NAMES)}")
    label = name if n == 1 else f"{name}{site}"
    return CentralLift(label, TensorElement.embed(lifts[name], site, n), l)


def loop_x_hat(n: int, l: int, site: int) -> CentralLift:
    """
    Phi_n(-c^{(i)l} prod_{k>i} delta^{(k)-l}) as a product of generic images.

    It specializes to the slot coordinate x^{(i)}; the lift differs from the
    canonical one by terms that vanish at eps.
    """
    power = loop_generators(n)[f"c{site}"].canonical ** l
    for k in range(site + 1, n + 1):
        power = power * TensorElement.embed(K ** l, k, n)
    return CentralLift(f"x_hat{site}", -power, l)


def site_coordinate_residuals(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """x_hat^{(i)} - x^{(i)} at eps for every site."""
    return {f"x_hat{site}": loop_x_hat(n, l, site).at_eps() - central_lift("x", l, site, n).at_eps()
            for site in range(1, n + 1)}


def diagonal_lift(name: str, l: int, n: int) -> CentralLift:
    """Delta^{(n-1)} of the lift of a central element; for n = 1 the lift itself."""
    lifts = generic_lifts(l)
    if name not in lifts:
        raise ValueError(f"Unknown central element '{name}', expected one of {', '.join(LIFT_NAMES)}")
    label = name if n == 1 else f"Delta({name})"
    return CentralLift(label, coproduct_iterated(lifts[name], n), l)
