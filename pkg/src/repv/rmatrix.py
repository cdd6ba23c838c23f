"""
The universal R-matrix on finite-dimensional modules.

    R = q^{H (x) H / 2} sum_n q^{n(n-1)/2} (q - q^{-1})^n / [n]! E^n (x) F^n

The Cartan factor acts on e_a (x) e_b by v^{mu_a mu_b}; E and F are nilpotent on
V_m so the sum is finite. The completion element itself is never built.
"""

from functools import lru_cache
from typing import Union

from scalar import ONE, Q_DIFF, ZERO, q_factorial, q_power, v_power
from uqsl2 import PbwElement, PbwMonomial, coproduct, coproduct_opposite
from repv.matrix import AlgebraMatrix, embed_legs, flip_matrix
from repv.modules import Module, module, represent_tensor

ModuleLike = Union[int, Module]


def _as_module(value: ModuleLike) -> Module:
    return module(value) if isinstance(value, int) else value


@lru_cache(maxsize=None)
def r_coefficient(n: int):
    """q^{n(n-1)/2} (q - q^{-1})^n / [n]!."""
    return q_power(n * (n - 1) // 2) * Q_DIFF ** n / q_factorial(n)


@lru_cache(maxsize=None)
def _r_matrix(first: Module, second: Module) -> AlgebraMatrix:
    total = None
    for n in range(min(first.dimension, second.dimension)):
        term = (first.e_matrix ** n).kron(second.f_matrix ** n) * r_coefficient(n)
        total = term if total is None else total + term
    cartan = AlgebraMatrix.diagonal(
        [v_power(a * b) for a in first.weights for b in second.weights], ZERO)
    return cartan @ total


def r_matrix(m1: ModuleLike, m2: ModuleLike) -> AlgebraMatrix:
    """(pi_{V1} (x) pi_{V2})(R) in the basis e_a (x) f_b, a-major."""
    return _r_matrix(_as_module(m1), _as_module(m2))


@lru_cache(maxsize=None)
def _r_matrix_inverse(first: Module, second: Module) -> AlgebraMatrix:
    return _r_matrix(first, second).inverse()


def r_matrix_inverse(m1: ModuleLike, m2: ModuleLike) -> AlgebraMatrix:
    return _r_matrix_inverse(_as_module(m1), _as_module(m2))


def r_matrix_21(m1: ModuleLike, m2: ModuleLike) -> AlgebraMatrix:
    """R_21 = P R_{V2,V1} P on V1 (x) V2."""
    first, second = _as_module(m1), _as_module(m2)
    flip = flip_matrix(first.dimension, second.dimension, ONE, ZERO)
    back = flip_matrix(second.dimension, first.dimension, ONE, ZERO)
    return back @ r_matrix(second, first) @ flip


def yang_baxter_residual(m: ModuleLike = 2) -> AlgebraMatrix:
    """R_12 R_13 R_23 - R_23 R_13 R_12 on V^{(x) 3}."""
    target = _as_module(m)
    r = r_matrix(target, target)
    dims = (target.dimension,) * 3
    r12 = embed_legs(r, (0, 1), dims)
    r13 = embed_legs(r, (0, 2), dims)
    r23 = embed_legs(r, (1, 2), dims)
    return r12 @ r13 @ r23 - r23 @ r13 @ r12


def intertwining_residual(u: PbwElement, m1: ModuleLike = 2, m2: ModuleLike = 2) -> AlgebraMatrix:
    """R Delta(u) - Delta^cop(u) R on V1 (x) V2."""
    first, second = _as_module(m1), _as_module(m2)
    r = r_matrix(first, second)
    delta = represent_tensor(coproduct(u), (first, second))
    delta_cop = represent_tensor(coproduct_opposite(u), (first, second))
    return r @ delta - delta_cop @ r


def has_odd_laurent_entries(matrix: AlgebraMatrix) -> bool:
    """Every nonzero entry is a Laurent polynomial in v with only odd exponents."""
    for _, _, entry in matrix.entries():
        if not entry.is_laurent:
            return False
        if any(k % 2 == 0 for k in entry.numerator.coefficients):
            return False
    return True


def rsd_matrix(target: ModuleLike) -> AlgebraMatrix:
    """
    (pi_V (x) id)(R_12 R_21) with entries in U_q(sl2).

    Entry (i, j) is

        sum_{m,n} c_m c_n q^{-n mu''} <e_i| E^n F^m |e_j> F^n K^{mu_j - 2m + n} E^m

    where c_k = r_coefficient(k), mu' = mu_j - 2m and mu'' = mu' + 2n. Only
    integral powers of K occur, so the result stays inside U_q(sl2).
    """
    target = _as_module(target)
    d = target.dimension
    data = [[PbwElement() for _ in range(d)] for _ in range(d)]
    f_powers = [target.f_matrix ** m for m in range(d)]
    e_powers = [target.e_matrix ** n for n in range(d)]
    for j, weight in enumerate(target.weights):
        for m in range(d):
            for n in range(d):
                action = e_powers[n] @ f_powers[m]
                mu_double = weight - 2 * m + 2 * n
                scalar = r_coefficient(m) * r_coefficient(n) * q_power(-n * mu_double)
                monomial = PbwElement({PbwMonomial(n, weight - 2 * m + n, m): scalar})
                for i in range(d):
                    entry = action[i, j]
                    if entry:
                        data[i][j] = data[i][j] + monomial * entry
    return AlgebraMatrix(data, PbwElement())
