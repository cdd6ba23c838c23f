"""
The Frobenius map as a map of Poisson algebras.

For generators f, g of O(G^n) the left side {Fr(f), Fr(g)}_QCA is computed
with the derivations of the slot coordinates: Fr(f) is read as a polynomial
P_f(x, y, z^{+-1}) and

    {Fr(f), Fr(g)} = sum_v dP_f/dv D_v(Fr(g)),

the D_v applied to the central element Fr(g) of U_eps^{(x) n}. The right side
is the Fock-Rosly bracket {f, g}_FR with Fr substituted.
"""

import random
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Tuple

from common.config import config as app_config
from common.logging_utils import get_logger
from rootcenter import frobenius
from qca import DerivationValue, central_lift
from poisson.brackets import fr_bracket, qca_bracket_model
from poisson.commpoly import COORDINATE_NAMES, CommPoly, coordinate_space, matrix_space
from poisson.configs.poisson_config import config
from poisson.coordinates import to_coordinates

logger = get_logger("poisson")

Pair = Tuple[str, str]


def _split(name: str) -> Tuple[str, int]:
    return name[0], int(name[1:])


@lru_cache(maxsize=None)
def frobenius_coordinates(n: int, l: int) -> Dict[str, CommPoly]:
    """Fr of every matrix entry as a coordinate polynomial, keyed 'a1', ..., 'd{n}'."""
    images = {}
    for site in range(1, n + 1):
        for entry, element in frobenius(n, l, site).entries().items():
            images[f"{entry}{site}"] = to_coordinates(element)
    return images


@lru_cache(maxsize=None)
def coordinate_derivations(n: int, l: int) -> Dict[str, DerivationValue]:
    """D_v for the slot coordinates v = x{i}, y{i}, z{i}, z_inv{i}."""
    return {f"{name}{site}": DerivationValue.of_central(central_lift(name, l, site, n), l,
                                                        f"D_{name}{site}")
            for site in range(1, n + 1) for name in COORDINATE_NAMES}


def apply_frobenius(f: CommPoly, l: int) -> CommPoly:
    """Fr on a polynomial in the matrix entries."""
    n = f.space.n
    return f.evaluate(frobenius_coordinates(n, l), coordinate_space(n).one)


def qca_side(f: str, g: str, n: int, l: int, route: str = "derivations") -> CommPoly:
    """
    {Fr(f), Fr(g)}_QCA for generator names like 'd1', 'b2'.

    route 'derivations' applies D_v to the Frobenius image of g in U_eps^{(x) n};
    route 'model' uses the coordinate bracket table.
    """
    images = frobenius_coordinates(n, l)
    if route == "model":
        return qca_bracket_model(n).bracket(images[f], images[g])
    if route != "derivations":
        raise ValueError(f"Unknown route '{route}', expected 'derivations' or 'model'")
    entry, site = _split(g)
    target = frobenius(n, l, site).entries()[entry]
    derivations = coordinate_derivations(n, l)
    source = images[f]
    total = coordinate_space(n).zero
    for v in source.variables():
        total = total + source.diff(v) * to_coordinates(derivations[v](target))
    return total


def fr_side(f: str, g: str, n: int, l: int, literal: bool = False) -> CommPoly:
    """Fr({f, g}_FR)."""
    return apply_frobenius(fr_bracket(n, literal).value(f, g), l)


def fr_poisson_residual(f: str, g: str, n: int, l: int, route: str = "derivations",
                        literal: bool = False) -> CommPoly:
    return qca_side(f, g, n, l, route) - fr_side(f, g, n, l, literal)


def generator_pairs(n: int, sample: int = None, seed: int = None) -> List[Pair]:
    """
    All pairs of generators for n = 1; for n >= 2 the pair (d1, d2) followed by a
    sample of cross-site pairs (all of them when sample is 0).
    """
    names = matrix_space(n).names
    if n == 1:
        return list(combinations_with_replacement(names, 2))
    sample = config.cross_site_pairs if sample is None else sample
    seed = app_config.runtime.seed if seed is None else seed
    cross = [(u, v) for u in names for v in names if _split(u)[1] < _split(v)[1]]
    first = ("d1", "d2")
    rest = [pair for pair in cross if pair != first]
    if sample and sample - 1 < len(rest):
        rest = random.Random(seed).sample(rest, sample - 1)
    return [first] + rest


def fr_poisson_residuals(n: int, l: int, pairs=None, route: str = "derivations") -> Dict[str, CommPoly]:
    pairs = generator_pairs(n) if pairs is None else pairs
    logger.debug(f"Comparing {len(pairs)} generator brackets for n={n}, l={l} ({route})")
    return {f"{{{f},{g}}}": fr_poisson_residual(f, g, n, l, route) for f, g in pairs}


def frobenius_determinants(n: int, l: int) -> Dict[str, CommPoly]:
    """det Fr(L^{(i)}) - 1 in coordinates."""
    images = frobenius_coordinates(n, l)
    return {f"det Fr L{site}": images[f"a{site}"] * images[f"d{site}"]
            - images[f"b{site}"] * images[f"c{site}"] - 1 for site in range(1, n + 1)}
