"""
Reading elements of Z_0(U_eps)^{(x) n} as polynomials in the slot coordinates.

At eps the product y^b x^a z^c of one slot is a single PBW monomial
F^{lb} K^{l(c-a)} E^{la} times a nonzero scalar, so an element of Z_0 is read
monomial by monomial.
"""

from functools import lru_cache
from fractions import Fraction
from typing import Dict, Tuple

from common.logging_utils import get_logger
from scalar import Cyclotomic
from rootcenter import EpsTensorElement, slot_coordinates
from poisson.commpoly import CommPoly, coordinate_space, dressing_space
from poisson.errors import NotInSmallCenter

logger = get_logger("poisson")

SlotExponents = Tuple[int, int, int]


def _slot_exponents(monomial, l: int) -> SlotExponents:
    """(a, b, c) with F^{lb} K^{l(c-a)} E^{la} = monomial, or raise."""
    f_exp, k_exp, e_exp = monomial
    if f_exp % l or k_exp % l or e_exp % l:
        raise NotInSmallCenter(monomial, f"exponents are not multiples of {l}")
    a, b = e_exp // l, f_exp // l
    return a, b, k_exp // l + a


@lru_cache(maxsize=None)
def coordinate_monomial(n: int, l: int, exponents: Tuple[SlotExponents, ...]) -> EpsTensorElement:
    """prod_i y^{(i) b} x^{(i) a} z^{(i) c} at eps."""
    coordinates = slot_coordinates(n, l)
    result = EpsTensorElement.identity(n, l)
    for slot, (a, b, c) in enumerate(exponents, start=1):
        z = coordinates[f"z{slot}"] if c >= 0 else coordinates[f"z_inv{slot}"]
        result = result * coordinates[f"y{slot}"] ** b * coordinates[f"x{slot}"] ** a * z ** abs(c)
    return result


def _rational(value: Cyclotomic, key) -> Fraction:
    coefficients = value.coeffs
    if any(coefficients[1:]):
        raise NotInSmallCenter(key, f"coefficient {value} is not rational")
    return coefficients[0]


def to_coordinates(element: EpsTensorElement) -> CommPoly:
    """
    The polynomial in x^{(i)}, y^{(i)}, z^{(i)+-1} equal to element.

    Raises:
        NotInSmallCenter: for a monomial outside Z_0 or an irrational coordinate coefficient
    """
    n, l = element.arity, element.root.l
    space = coordinate_space(n)
    gens = space.gens()
    result = space.zero
    for key, coefficient in element.terms.items():
        exponents = tuple(_slot_exponents(monomial, l) for monomial in key)
        basis = coordinate_monomial(n, l, exponents)
        if len(basis) != 1 or key not in basis.terms:
            raise NotInSmallCenter(key, "coordinate product is not a single monomial")
        scale = _rational(coefficient / basis.terms[key], key)
        term = space.constant(scale)
        for slot, (a, b, c) in enumerate(exponents, start=1):
            z = gens[f"z{slot}"] if c >= 0 else gens[f"z_inv{slot}"]
            term = term * gens[f"x{slot}"] ** a * gens[f"y{slot}"] ** b * z ** abs(c)
        result = result + term
    logger.debug(f"Read {len(element)} monomials as {len(result.poly)} coordinate terms")
    return result


def from_coordinates(poly: CommPoly, l: int) -> EpsTensorElement:
    """The element of U_eps^{(x) n} a coordinate polynomial stands for."""
    n = poly.space.n
    return poly.evaluate(slot_coordinates(n, l), EpsTensorElement.identity(n, l))


# ----------------------------------------------------------------------
# z = zp^2
# ----------------------------------------------------------------------
def to_dressing(poly: CommPoly) -> CommPoly:
    """Coordinates to the x, y, zp variables with z = zp^2."""
    n = poly.space.n
    target = dressing_space(n)
    gens = target.gens()
    images = {}
    for site in range(1, n + 1):
        images[f"x{site}"] = gens[f"x{site}"]
        images[f"y{site}"] = gens[f"y{site}"]
        images[f"z{site}"] = gens[f"zp{site}"] ** 2
        images[f"z_inv{site}"] = gens[f"zp_inv{site}"] ** 2
    return poly.evaluate(images, target.one)


def odd_square_root_terms(poly: CommPoly) -> Dict[str, int]:
    """Variables zp{i}, zp_inv{i} that occur to an odd power, with that power."""
    odd = {}
    for exponents, _ in poly.terms():
        for name, k in exponents.items():
            if name.startswith("zp") and k % 2:
                odd[name] = k
    return odd


def from_dressing(poly: CommPoly) -> CommPoly:
    """
    Back to coordinates; only defined when every zp exponent is even.

    Raises:
        ValueError: naming a square-root variable that does not cancel
    """
    odd = odd_square_root_terms(poly)
    if odd:
        raise ValueError(f"Square-root variables do not cancel: {odd}")
    space = coordinate_space(poly.space.n)
    gens = space.gens()
    result = space.zero
    for exponents, coefficient in poly.terms():
        term = space.constant(coefficient)
        for name, k in exponents.items():
            if name.startswith("zp_inv"):
                term = term * gens["z_inv" + name[len("zp_inv"):]] ** (k // 2)
            elif name.startswith("zp"):
                term = term * gens["z" + name[len("zp"):]] ** (k // 2)
            else:
                term = term * gens[name] ** k
        result = result + term
    return result
