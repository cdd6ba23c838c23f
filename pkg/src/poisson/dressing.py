"""
The dressing of the Frobenius matrices by the later sites, and the group
structure of Spec Z_0(U_eps).

With z = zp^2 on each site,

    M_+ = [[zp, zp y], [0, zp^-1]]    M_- = [[zp^-1, 0], [zp x, zp]]
    M   = M_+ M_-^{-1} = [[z - z x y, y], [-x, z^-1]]

and the matrix dressing site i is

    R^(i) = [[P, P S], [0, P^-1]] = M_+^(n) ... M_+^(i+1)
    P = zp^(i+1) ... zp^(n),   S = sum_{j > i} z^-1 (i+1) ... z^-1 (j-1) y^(j).

Phi_n o (Phi_1^{(x) n})^{-1} sends the Frobenius matrix M^(i) of site i to
R^(i) M^(i) R^(i)^{-1}; every zp cancels in the conjugate.
"""

from typing import Dict, List, Tuple

from common.logging_utils import get_logger
from rootcenter import frobenius
from poisson.commpoly import (
    CommPoly, VariableSpace, dressing_space, inverse_unimodular, matmul2,
)
from poisson.coordinates import odd_square_root_terms, to_coordinates, to_dressing

logger = get_logger("poisson")

Matrix = List[List[CommPoly]]


def _site(space: VariableSpace, site: int) -> Tuple[CommPoly, CommPoly, CommPoly, CommPoly]:
    g = space.gens()
    return g[f"x{site}"], g[f"y{site}"], g[f"zp{site}"], g[f"zp_inv{site}"]


def plus_matrix(space: VariableSpace, site: int) -> Matrix:
    _, y, zp, zp_inv = _site(space, site)
    return [[zp, zp * y], [space.zero, zp_inv]]


def minus_matrix(space: VariableSpace, site: int) -> Matrix:
    x, _, zp, zp_inv = _site(space, site)
    return [[zp_inv, space.zero], [zp * x, zp]]


def script_m(space: VariableSpace, site: int) -> Matrix:
    """[[z - z x y, y], [-x, z^-1]] with z = zp^2."""
    x, y, zp, zp_inv = _site(space, site)
    z, z_inv = zp * zp, zp_inv * zp_inv
    return [[z - z * x * y, y], [-x, z_inv]]


def identity_matrix(space: VariableSpace) -> Matrix:
    return [[space.one, space.zero], [space.zero, space.one]]


def dressing_matrix(n: int, site: int) -> Matrix:
    """R^(site) from the closed products P and P S."""
    space = dressing_space(n)
    p, p_inv, s = space.one, space.one, space.zero
    z_inv_run = space.one
    for k in range(site + 1, n + 1):
        _, y, zp, zp_inv = _site(space, k)
        p, p_inv = p * zp, p_inv * zp_inv
        s = s + z_inv_run * y
        z_inv_run = z_inv_run * zp_inv * zp_inv
    return [[p, p * s], [space.zero, p_inv]]


def dressing_product(n: int, site: int) -> Matrix:
    """M_+^(n) ... M_+^(site+1)."""
    space = dressing_space(n)
    result = identity_matrix(space)
    for k in range(n, site, -1):
        result = matmul2(result, plus_matrix(space, k))
    return result


def conjugated_matrix(n: int, site: int) -> Matrix:
    """R^(i) M^(i) R^(i)^{-1}."""
    space = dressing_space(n)
    r = dressing_matrix(n, site)
    return matmul2(matmul2(r, script_m(space, site)), inverse_unimodular(r))


def dressed_frobenius_matrix(n: int, l: int, site: int) -> Matrix:
    """Phi_n of the Frobenius matrix of a site, read in the dressing variables."""
    image = frobenius(n, l, site).matrix()
    return [[to_dressing(to_coordinates(entry)) for entry in row] for row in image]


def _entrywise(left: Matrix, right: Matrix, label: str) -> Dict[str, CommPoly]:
    return {f"{label}{i + 1}{j + 1}": left[i][j] - right[i][j] for i in range(2) for j in range(2)}


def dressing_residuals(n: int, l: int, site: int) -> Dict[str, object]:
    """
    Pi(M^(i)) - R^(i) M^(i) R^(i)^{-1} entrywise, the product form of R^(i), and
    the cancellation of zp in the conjugate.
    """
    if not 1 <= site <= n:
        raise ValueError(f"Site {site} outside 1..{n}")
    conjugate = conjugated_matrix(n, site)
    residuals: Dict[str, object] = {}
    residuals.update(_entrywise(dressing_matrix(n, site), dressing_product(n, site), "R"))
    for i in range(2):
        for j in range(2):
            residuals[f"zp cancels in entry {i + 1}{j + 1}"] = odd_square_root_terms(conjugate[i][j])
    residuals.update(_entrywise(dressed_frobenius_matrix(n, l, site), conjugate, "Pi(M)"))
    logger.debug(f"Dressing identity for site {site} of n={n} at l={l} evaluated")
    return residuals


# ----------------------------------------------------------------------
# group law on Spec Z_0 and the map psi from G*
# ----------------------------------------------------------------------
def psi(plus: Matrix, minus: Matrix) -> Dict[str, CommPoly]:
    """(x, y, zp) of a pair (M_+, M_-), with z = zp^2."""
    zp = plus[0][0]
    return {
        "x": minus[1][0] * minus[0][0],
        "y": plus[0][1] * plus[1][1],
        "zp": zp,
        "z": zp * zp,
    }


def pair_consistency(plus: Matrix, minus: Matrix) -> Dict[str, CommPoly]:
    """The diagonal of M_- is the reversed diagonal of M_+, and det M_+ = 1."""
    return {
        "M_-11 = M_+22": minus[0][0] - plus[1][1],
        "M_-22 = M_+11": minus[1][1] - plus[0][0],
        "det M_+ = 1": plus[0][0] * plus[1][1] - 1,
    }


def pair_product(first: Tuple[Matrix, Matrix], second: Tuple[Matrix, Matrix]) -> Tuple[Matrix, Matrix]:
    """Product in G* inside SL2^op x SL2^op."""
    return matmul2(second[0], first[0]), matmul2(second[1], first[1])


def pair_inverse(pair: Tuple[Matrix, Matrix]) -> Tuple[Matrix, Matrix]:
    return inverse_unimodular(pair[0]), inverse_unimodular(pair[1])


def character(space: VariableSpace, site: int) -> Tuple[Matrix, Matrix]:
    return plus_matrix(space, site), minus_matrix(space, site)


def group_law(first: Dict[str, CommPoly], second: Dict[str, CommPoly],
              first_z_inv: CommPoly) -> Dict[str, CommPoly]:
    """x = x1 + z1^-1 x2, y = y1 + y2 z1^-1, z = z1 z2."""
    return {
        "x": first["x"] + first_z_inv * second["x"],
        "y": first["y"] + second["y"] * first_z_inv,
        "z": first["z"] * second["z"],
    }


def _coordinates(space: VariableSpace, site: int) -> Tuple[Dict[str, CommPoly], CommPoly]:
    x, y, zp, zp_inv = _site(space, site)
    return {"x": x, "y": y, "z": zp * zp}, zp_inv * zp_inv


def group_law_residuals() -> Dict[str, object]:
    """
    The product, inverse and unit of G* pushed through psi against the group law
    of Spec Z_0, associativity of that law, and sigma(M_+, M_-) = M.
    """
    space = dressing_space(3)
    one, zero = space.one, space.zero
    chi1, chi2, chi3 = (character(space, site) for site in (1, 2, 3))
    (c1, z1_inv), (c2, z2_inv), (c3, _) = (_coordinates(space, site) for site in (1, 2, 3))
    residuals: Dict[str, object] = {}

    product = psi(*pair_product(chi1, chi2))
    expected = group_law(c1, c2, z1_inv)
    for key in ("x", "y", "z"):
        residuals[f"psi(product) {key}"] = product[key] - expected[key]
    residuals.update({f"product {k}": v for k, v in pair_consistency(*pair_product(chi1, chi2)).items()})

    x, y, zp, zp_inv = _site(space, 1)
    inverse = psi(*pair_inverse(chi1))
    residuals["psi(inverse) x = -z x"] = inverse["x"] + zp * zp * x
    residuals["psi(inverse) y = -y z"] = inverse["y"] + y * zp * zp
    residuals["psi(inverse) z = z^-1"] = inverse["z"] - zp_inv * zp_inv

    for sign in (1, -1):
        unit = [[one * sign, zero], [zero, one * sign]]
        values = psi(unit, unit)
        residuals[f"psi({sign:+d}(I, I)) is the unit"] = {
            "x": values["x"], "y": values["y"], "z": values["z"] - 1}

    left = group_law(group_law(c1, c2, z1_inv), c3, z1_inv * z2_inv)
    right = group_law(c1, group_law(c2, c3, z2_inv), z1_inv)
    for key in ("x", "y", "z"):
        residuals[f"associativity {key}"] = left[key] - right[key]

    plus, minus = chi1
    sigma = matmul2(plus, inverse_unimodular(minus))
    residuals.update(_entrywise(sigma, script_m(space, 1), "sigma "))
    return residuals
