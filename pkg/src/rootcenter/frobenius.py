"""
The Frobenius map into the center of L_{0,n}^eps and the closed forms of the
l-th powers of the generators.

On each site

    Fr(a) = T_l(omega) - d^l    Fr(b) = b^l    Fr(c) = c^l    Fr(d) = d^l

where a^l + Q_l(a, d) = T_l(omega) - d^l because a and d commute. In the Z_0
coordinates x, y, z of the slots (S_i = y^{(i+1)} + z^{-1 (i+1)} y^{(i+2)} + ...):

    Phi_n(c^{(i) l}) = -x^{(i)} prod_{k>i} z^{-1 (k)}
    Phi_n(d^{(i) l}) = z^{-1 (i)} + x^{(i)} S_i
    Phi_n(b^{(i) l}) = prod_{k>i} z^{(k)} (y^{(i)} - S_i (T_l(Omega^{(i)}) - 2 z^{-1 (i)}) + S_i^2 x^{(i)})
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence

from common.logging_utils import get_logger
from scalar import Q_DIFF, chebyshev_apply
from uqsl2 import E, F, K, K_INV, UNIT, PbwElement, casimir
from graphalg import loop_generators, omega, phi1_generators
from rootcenter.specialized import (
    EpsTensorElement, as_root, embed_at, slot_coordinates, specialize_element,
)

logger = get_logger("rootcenter")

ENTRY_NAMES = ("a", "b", "c", "d")


def chebyshev_of(element: EpsTensorElement, k: int) -> EpsTensorElement:
    """T_k(element) in U_eps^{(x) n}."""
    return chebyshev_apply(k, element, EpsTensorElement.identity(element.arity, element.root))


@lru_cache(maxsize=None)
def eps_generators(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """The 4n generators of L_{0,n}^eps through Phi_n, keyed like loop_generators."""
    return {name: specialize_element(generator.canonical, l)
            for name, generator in loop_generators(n).items()}


@lru_cache(maxsize=None)
def eps_omega(n: int, l: int, site: int) -> EpsTensorElement:
    return specialize_element(omega(n, site).canonical, l)


@lru_cache(maxsize=None)
def generator_power(n: int, l: int, name: str) -> EpsTensorElement:
    """g^l for a generator name like 'b2', by repeated squaring."""
    power = eps_generators(n, l)[name] ** l
    logger.debug(f"{name}^{l} for n={n}: {len(power)} terms")
    return power


# ----------------------------------------------------------------------
# Frobenius images
# ----------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class FrImage:
    """Fr of the matrix entries of one site, as elements of U_eps^{(x) n}."""

    n: int
    site: int
    l: int
    a: EpsTensorElement
    b: EpsTensorElement
    c: EpsTensorElement
    d: EpsTensorElement

    def entries(self) -> Dict[str, EpsTensorElement]:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    def matrix(self) -> List[List[EpsTensorElement]]:
        return [[self.a, self.b], [self.c, self.d]]

    def determinant_residual(self) -> EpsTensorElement:
        """Fr(a) Fr(d) - Fr(b) Fr(c) - 1, the generator of the site's relation ideal."""
        return self.a * self.d - self.b * self.c - 1

    def trace(self) -> EpsTensorElement:
        return self.a + self.d


@lru_cache(maxsize=None)
def frobenius(n: int, l: int, site: int) -> FrImage:
    if not 1 <= site <= n:
        raise ValueError(f"Site {site} outside 1..{n}")
    as_root(l)  # rejects even or small l
    d_power = generator_power(n, l, f"d{site}")
    a_image = chebyshev_of(eps_omega(n, l, site), l) - d_power
    return FrImage(n, site, l, a_image, generator_power(n, l, f"b{site}"),
                   generator_power(n, l, f"c{site}"), d_power)


def phi1_frobenius_lift(l: int) -> Dict[str, PbwElement]:
    """
    Generic representatives of Phi_1(Fr M) = [[T_l(Omega) - K^{-l}, b^l], [c^l, K^{-l}]]
    whose images at eps are the Frobenius images of L_{0,1}.
    """
    _, b, c, d = phi1_generators()
    d_power = d ** l
    return {
        "a": chebyshev_apply(l, casimir(), UNIT) - d_power,
        "b": b ** l,
        "c": c ** l,
        "d": d_power,
    }


def fr_product(n: int, l: int, sites: Sequence[int]) -> List[List[EpsTensorElement]]:
    """Fr M^{(i_1)} ... Fr M^{(i_k)} as a 2x2 array."""
    product = frobenius(n, l, sites[0]).matrix()
    for site in sites[1:]:
        right = frobenius(n, l, site).matrix()
        product = [[product[i][0] * right[0][j] + product[i][1] * right[1][j] for j in range(2)]
                   for i in range(2)]
    return product


# ----------------------------------------------------------------------
# closed forms in Z_0 coordinates
# ----------------------------------------------------------------------
def _z_inv_tail(n: int, l: int, site: int, last: int = None) -> EpsTensorElement:
    """prod_{k = site+1}^{last} z^{-1 (k)}."""
    coordinates = slot_coordinates(n, l)
    last = n if last is None else last
    result = EpsTensorElement.identity(n, l)
    for k in range(site + 1, last + 1):
        result = result * coordinates[f"z_inv{k}"]
    return result


def s_sum(n: int, l: int, site: int) -> EpsTensorElement:
    """S_i = sum_{j > i} z^{-1 (i+1)} ... z^{-1 (j-1)} y^{(j)}."""
    coordinates = slot_coordinates(n, l)
    total = EpsTensorElement(n, l)
    for j in range(site + 1, n + 1):
        total = total + _z_inv_tail(n, l, site, j - 1) * coordinates[f"y{j}"]
    return total


def closed_c_power(n: int, l: int, site: int) -> EpsTensorElement:
    return -(slot_coordinates(n, l)[f"x{site}"] * _z_inv_tail(n, l, site))


def closed_d_power(n: int, l: int, site: int) -> EpsTensorElement:
    coordinates = slot_coordinates(n, l)
    return coordinates[f"z_inv{site}"] + coordinates[f"x{site}"] * s_sum(n, l, site)


def closed_b_power(n: int, l: int, site: int) -> EpsTensorElement:
    coordinates = slot_coordinates(n, l)
    s = s_sum(n, l, site)
    z_tail = EpsTensorElement.identity(n, l)
    for k in range(site + 1, n + 1):
        z_tail = z_tail * coordinates[f"z{k}"]
    t_omega = chebyshev_of(embed_at(casimir(), site, n, l), l)
    inner = (coordinates[f"y{site}"] - s * (t_omega - coordinates[f"z_inv{site}"] * 2)
             + s * s * coordinates[f"x{site}"])
    return z_tail * inner


def closed_form_residuals(n: int, l: int, site: int) -> Dict[str, EpsTensorElement]:
    """Direct l-th powers of b, c, d at a site minus their closed forms."""
    return {
        f"b{site}^l": generator_power(n, l, f"b{site}") - closed_b_power(n, l, site),
        f"c{site}^l": generator_power(n, l, f"c{site}") - closed_c_power(n, l, site),
        f"d{site}^l": generator_power(n, l, f"d{site}") - closed_d_power(n, l, site),
    }


def casimir_chebyshev_residuals(l: int) -> Dict[str, EpsTensorElement]:
    """
    T_l(Omega) - (eps - eps^{-1})^{2l} E^l F^l - K^l - K^{-l} in U_eps, and the same
    identity in coordinates, T_l(Omega) - z + z x y - z^{-1}.
    """
    t_omega = chebyshev_of(specialize_element(casimir(), l), l)
    expected = specialize_element(E ** l * F ** l * (Q_DIFF ** (2 * l)) + K ** l + K_INV ** l, l)
    coordinates = slot_coordinates(1, l)
    x, y, z, z_inv = (coordinates[name] for name in ("x1", "y1", "z1", "z_inv1"))
    return {
        "PBW form": t_omega - expected,
        "coordinates": t_omega - z + z * x * y - z_inv,
    }
