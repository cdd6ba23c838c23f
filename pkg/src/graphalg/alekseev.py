"""
Generator matrices of L_{0,n}(sl2) inside U_q(sl2)^{(x) n}.

Site a carries the 2x2 matrix [[a, b], [c, d]] of the fundamental module. On a
single site the images are

    a = K + q^{-1} (q - q^{-1})^2 F E     b = q^{-1} (q - q^{-1}) F
    c = (q - q^{-1}) K^{-1} E             d = K^{-1}

and the site-a matrix of L_{0,n} is the single-site matrix placed at slot a and
conjugated by R_{0k} for k = a+1, ..., n. For the fundamental module

    R_{0k} = diag(K^{1/2}, K^{-1/2})_k [[1, (q - q^{-1}) F_k], [0, 1]]

so every conjugation is a unipotent step followed by a half twist that only
produces integral powers of K. The closed 2x2 formula of conjugate_new_leg and
the leg-wise conjugate_leg compute the same thing; the latter also handles
fused auxiliary spaces.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence, Tuple

from common.logging_utils import get_logger
from scalar import Q, Q_DIFF, q_power
from uqsl2 import E, F, K, K_INV, UNIT, PbwElement, TensorElement, k_power
from repv import AlgebraMatrix, embed_legs, module, rsd_matrix, tensor_module

logger = get_logger("graphalg")

GENERATOR_NAMES = ("a", "b", "c", "d")
GENERATOR_POSITIONS = {"a": (0, 0), "b": (0, 1), "c": (1, 0), "d": (1, 1)}
FUNDAMENTAL_WEIGHTS = (1, -1)


def phi1_generators() -> Tuple[PbwElement, PbwElement, PbwElement, PbwElement]:
    """(a, b, c, d) of L_{0,1} as elements of U_q(sl2)."""
    a = K + F * E * (Q_DIFF * Q_DIFF * q_power(-1))
    b = F * (Q_DIFF * q_power(-1))
    c = K_INV * E * Q_DIFF
    d = K_INV
    return a, b, c, d


def phi1_matrix() -> AlgebraMatrix:
    a, b, c, d = phi1_generators()
    return AlgebraMatrix([[a, b], [c, d]], PbwElement())


def extend_matrix(matrix: AlgebraMatrix) -> AlgebraMatrix:
    """Append a unit slot to every entry."""
    arity = matrix.zero.arity + 1
    return matrix.map(lambda entry: TensorElement.tensor(entry, UNIT), TensorElement(arity))


# ----------------------------------------------------------------------
# conjugation by R_{0k}
# ----------------------------------------------------------------------
def conjugate_new_leg(matrix: AlgebraMatrix) -> AlgebraMatrix:
    """
    R_{0k} (X (x) 1) R_{0k}^{-1} for X = [[u, v], [w, t]] with entries in U^{(x) k-1}:

        [[u (x) 1 + q^{-1} c' w (x) F,   v (x) K + q c' (t - u) (x) K F - q^2 c'^2 w (x) K F^2],
         [w (x) K^{-1},                  t (x) 1 - q c' w (x) F]]

    where c' = q - q^{-1}.
    """
    u, v = matrix[0, 0], matrix[0, 1]
    w, t = matrix[1, 0], matrix[1, 1]
    tensor = TensorElement.tensor
    upper_left = tensor(u, UNIT) + tensor(w, F) * (q_power(-1) * Q_DIFF)
    upper_right = (tensor(v, K)
                   + tensor(t - u, K * F) * (Q * Q_DIFF)
                   - tensor(w, K * F * F) * (q_power(2) * Q_DIFF * Q_DIFF))
    lower_left = tensor(w, K_INV)
    lower_right = tensor(t, UNIT) - tensor(w, F) * (Q * Q_DIFF)
    return AlgebraMatrix([[upper_left, upper_right], [lower_left, lower_right]],
                         TensorElement(matrix.zero.arity + 1))


def _unipotent(slot: int, sign: int) -> AlgebraMatrix:
    one = TensorElement.identity(slot)
    zero = TensorElement(slot)
    f_part = TensorElement.embed(F, slot, slot) * (Q_DIFF * sign)
    return AlgebraMatrix([[one, f_part], [zero, one]], zero)


def _half_twist(entry: TensorElement, slot: int, row_weight: int, col_weight: int) -> TensorElement:
    """K^{row/2}_slot entry K^{-col/2}_slot, with only integral K-powers left."""
    twisted = {}
    for key, coefficient in entry.terms.items():
        monomial = key[slot - 1]
        twisted[key] = coefficient * q_power(col_weight * (monomial.e_exp - monomial.f_exp))
    shift = (row_weight - col_weight) // 2
    return TensorElement.embed(k_power(shift), slot, slot) * TensorElement(entry.arity, twisted)


def conjugate_leg(matrix: AlgebraMatrix, leg: int, dims: Sequence[int] = (2,)) -> AlgebraMatrix:
    """
    Conjugate by R between the fundamental auxiliary leg `leg` (0-based) and the
    last slot of the entries. The entries must already carry that slot.
    """
    dims = tuple(dims)
    if dims[leg] != 2:
        raise ValueError(f"Leg {leg} has dimension {dims[leg]}, only the fundamental module is supported")
    slot = matrix.zero.arity
    unipotent = embed_legs(_unipotent(slot, 1), (leg,), dims)
    unipotent_inv = embed_legs(_unipotent(slot, -1), (leg,), dims)
    middle = unipotent @ matrix @ unipotent_inv
    indices = list(product(*(range(d) for d in dims)))
    rows = []
    for i, row_index in enumerate(indices):
        row_weight = FUNDAMENTAL_WEIGHTS[row_index[leg]]
        row = []
        for j, col_index in enumerate(indices):
            entry = middle[i, j]
            if entry:
                entry = _half_twist(entry, slot, row_weight, FUNDAMENTAL_WEIGHTS[col_index[leg]])
            row.append(entry)
        rows.append(row)
    return AlgebraMatrix(rows, matrix.zero)


# ----------------------------------------------------------------------
# site matrices
# ----------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class GenMatrix:
    """The site matrix (id (x) Phi_n)(M^{(site)}) on the fundamental module."""

    n: int
    site: int
    matrix: AlgebraMatrix

    def entry(self, name: str) -> TensorElement:
        return self.matrix[GENERATOR_POSITIONS[name]]

    def __repr__(self):
        return f"GenMatrix(n={self.n}, site={self.site})"


@lru_cache(maxsize=None)
def gen_matrix(n: int, site: int) -> GenMatrix:
    if not 1 <= site <= n:
        raise ValueError(f"Site {site} outside 1..{n}")
    current = phi1_matrix().map(lambda u: TensorElement.embed(u, site, site), TensorElement(site))
    for _ in range(site + 1, n + 1):
        current = conjugate_new_leg(current)
    logger.debug(f"Site matrix n={n}, site={site}: "
                 f"{sum(len(entry) for _, _, entry in current.entries())} terms")
    return GenMatrix(n, site, current)


@lru_cache(maxsize=None)
def fused_site_matrix(n: int, site: int) -> AlgebraMatrix:
    """
    Site matrix of V2 (x) V2: the RSD matrix of the tensor module at slot `site`,
    conjugated for every later slot (second auxiliary leg first).
    """
    if not 1 <= site <= n:
        raise ValueError(f"Site {site} outside 1..{n}")
    fused = tensor_module(module(2), module(2))
    current = rsd_matrix(fused).map(lambda u: TensorElement.embed(u, site, site), TensorElement(site))
    for _ in range(site + 1, n + 1):
        current = extend_matrix(current)
        current = conjugate_leg(current, 1, (2, 2))
        current = conjugate_leg(current, 0, (2, 2))
    return current
