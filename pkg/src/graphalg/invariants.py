"""
Distinguished elements of L_{0,n}(sl2): the central elements omega^{(i)} and
eta, and the invariant elements qTr(A M^{[lambda]}) built from a coloring of the
sites by the trivial or fundamental module and a coupon A.
"""

from functools import lru_cache
from typing import Dict, Sequence, Tuple

from common.logging_utils import get_logger
from scalar import ONE, Q, ZERO, q_power
from uqsl2 import TensorElement, commutator
from repv import (
    AlgebraMatrix, Module, embed_legs, module, quantum_trace, r_matrix, r_matrix_inverse,
    tensor_module,
)
from graphalg.alekseev import gen_matrix
from graphalg.errors import NotAnIntertwiner
from graphalg.loops import (
    LoopElement, diagonal_generators, loop_generators, loop_quantum_trace, site_product,
)

logger = get_logger("graphalg")

SUPPORTED_COLORS = (1, 2)


def omega(n: int, i: int) -> LoopElement:
    """omega^{(i)} = qTr(M^{(i)}) = q a^{(i)} + q^{-1} d^{(i)}."""
    generators = loop_generators(n)
    element = generators[f"a{i}"] * Q + generators[f"d{i}"] * q_power(-1)
    return LoopElement(element.canonical, f"omega{i}")


def eta(n: int) -> LoopElement:
    """eta = qTr(M^{(1)} ... M^{(n)})."""
    return LoopElement(loop_quantum_trace(site_product(n, 1)).canonical, "eta")


# ----------------------------------------------------------------------
# colorings
# ----------------------------------------------------------------------
def _check_coloring(coloring: Sequence[int], n: int):
    if len(coloring) != n:
        raise ValueError(f"Coloring {tuple(coloring)} does not have {n} entries")
    for color in coloring:
        if color not in SUPPORTED_COLORS:
            raise ValueError(f"Color {color} is not supported, use 1 (trivial) or 2 (fundamental)")


def coloring_module(coloring: Sequence[int]) -> Module:
    """V_{[lambda]} = V_{lambda_1} (x) ... (x) V_{lambda_n} through the coproduct."""
    modules = [module(color) for color in coloring]
    target = modules[-1]
    for factor in reversed(modules[:-1]):
        target = tensor_module(factor, target)
    return target


def colored_site_matrix(n: int, site: int, color: int) -> AlgebraMatrix:
    if color == 2:
        return gen_matrix(n, site).matrix
    return AlgebraMatrix([[TensorElement.identity(n)]], TensorElement(n))


def _s_matrix(coloring: Tuple[int, ...], k: int, inverse: bool = False) -> AlgebraMatrix:
    """S(k) = id^{(x)(k-2)} (x) (id (x) Delta^{(n-k)})(R) on V_{[lambda]}."""
    left = module(coloring[k - 2])
    right = coloring_module(coloring[k - 1:])
    block = r_matrix_inverse(left, right) if inverse else r_matrix(left, right)
    prefix = 1
    for color in coloring[:k - 2]:
        prefix *= module(color).dimension
    if prefix == 1:
        return block
    return AlgebraMatrix.identity(prefix, ONE, ZERO).kron(block)


@lru_cache(maxsize=None)
def lambda_matrix(n: int, coloring: Tuple[int, ...]) -> AlgebraMatrix:
    """
    M^{[lambda]} = M_1^{(1)} prod_{k=2}^{n} (S(k)^{-1} M_k^{(k)}) prod_{k=n}^{2} S(k)

    as a matrix on V_{[lambda]} with entries in U_q(sl2)^{(x) n}.
    """
    coloring = tuple(coloring)
    _check_coloring(coloring, n)
    dims = coloring
    result = embed_legs(colored_site_matrix(n, 1, coloring[0]), (0,), dims)
    for k in range(2, n + 1):
        site = embed_legs(colored_site_matrix(n, k, coloring[k - 1]), (k - 1,), dims)
        result = result @ _s_matrix(coloring, k, inverse=True) @ site
    for k in range(n, 1, -1):
        result = result @ _s_matrix(coloring, k)
    logger.debug(f"M^[lambda] for coloring {coloring}: "
                 f"{sum(len(entry) for _, _, entry in result.entries())} terms")
    return result


def temperley_lieb_projector() -> AlgebraMatrix:
    """
    The intertwiner of V2 (x) V2 factoring through the trivial module, normalized
    so that U^2 = -(q + q^{-1}) U.
    """
    rows = [[ZERO] * 4 for _ in range(4)]
    rows[1][1] = -Q
    rows[1][2] = ONE
    rows[2][1] = ONE
    rows[2][2] = -q_power(-1)
    return AlgebraMatrix(rows, ZERO)


def check_intertwiner(coupon: AlgebraMatrix, coloring: Sequence[int]):
    """Raise NotAnIntertwiner unless the coupon commutes with E, F and K on V_{[lambda]}."""
    target = coloring_module(coloring)
    if coupon.shape != (target.dimension, target.dimension):
        raise ValueError(f"Coupon of shape {coupon.shape} does not act on {target!r}")
    for name, action in (("E", target.e_matrix), ("F", target.f_matrix), ("K", target.k_matrix)):
        if not (coupon @ action - action @ coupon).is_zero():
            raise NotAnIntertwiner(coloring, name)


def invariant_element(n: int, coloring: Sequence[int], coupon: AlgebraMatrix = None) -> LoopElement:
    """qTr_{V_{[lambda]}}(coupon M^{[lambda]}); the identity coupon when none is given."""
    coloring = tuple(coloring)
    _check_coloring(coloring, n)
    target = coloring_module(coloring)
    if coupon is None:
        coupon = target.identity()
    else:
        check_intertwiner(coupon, coloring)
    element = quantum_trace(coupon @ lambda_matrix(n, coloring), target)
    return LoopElement(element, f"qTr[{','.join(map(str, coloring))}]")


# ----------------------------------------------------------------------
# residuals
# ----------------------------------------------------------------------
def centrality_residuals(element: LoopElement, n: int) -> Dict[str, TensorElement]:
    """[element, g] for the 4n generators g."""
    return {name: commutator(element.canonical, generator.canonical)
            for name, generator in loop_generators(n).items()}


def invariance_residuals(element: LoopElement, n: int) -> Dict[str, TensorElement]:
    """[element, Delta^{(n-1)}(g)] for g = a, b, c, d; all vanish on invariant elements."""
    return {name: commutator(element.canonical, generator.canonical)
            for name, generator in diagonal_generators(n).items()}
