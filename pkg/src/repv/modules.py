"""
Finite-dimensional weight modules of U_q(sl2).

V_m (m >= 1) has basis e_1, ..., e_m with

    K e_j = q^{m+1-2j} e_j,   F e_j = e_{j+1},   E e_j = [j-1][m-j+1] e_{j-1}

Tensor products use the coproduct, so V_2 (x) V_2 is again a weight module with
weights mu_a + mu_b on e_a (x) e_b.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

from scalar import ONE, Q_DIFF, ZERO, q_int, q_power
from uqsl2 import PbwElement, PbwMonomial, TensorElement
from repv.matrix import AlgebraMatrix


@dataclass(frozen=True, eq=False)
class Module:
    """A weight module: K acts diagonally by q^{weights[j]} on basis vector j."""

    name: str
    weights: Tuple[int, ...]
    e_matrix: AlgebraMatrix
    f_matrix: AlgebraMatrix

    @property
    def dimension(self) -> int:
        return len(self.weights)

    def k_power(self, exponent: int) -> AlgebraMatrix:
        return AlgebraMatrix.diagonal([q_power(exponent * mu) for mu in self.weights], ZERO)

    @property
    def k_matrix(self) -> AlgebraMatrix:
        return self.k_power(1)

    @property
    def k_inv_matrix(self) -> AlgebraMatrix:
        return self.k_power(-1)

    def identity(self) -> AlgebraMatrix:
        return AlgebraMatrix.identity(self.dimension, ONE, ZERO)

    def __repr__(self):
        return f"Module({self.name}, dim={self.dimension})"


@lru_cache(maxsize=None)
def module(m: int) -> Module:
    """The m-dimensional type-1 simple module V_m."""
    if m < 1:
        raise ValueError(f"Module dimension must be at least 1, got {m}")
    e_matrix = AlgebraMatrix.zeros(m, m, ZERO)
    f_matrix = AlgebraMatrix.zeros(m, m, ZERO)
    for j in range(1, m + 1):
        if j > 1:
            e_matrix._data[j - 2, j - 1] = q_int(j - 1) * q_int(m - j + 1)
        if j < m:
            f_matrix._data[j, j - 1] = ONE
    weights = tuple(m + 1 - 2 * j for j in range(1, m + 1))
    return Module(f"V{m}", weights, e_matrix, f_matrix)


@lru_cache(maxsize=None)
def tensor_module(first: Module, second: Module) -> Module:
    """first (x) second with E -> E (x) K + 1 (x) E and F -> K^{-1} (x) F + F (x) 1."""
    e_matrix = first.e_matrix.kron(second.k_matrix) + first.identity().kron(second.e_matrix)
    f_matrix = first.k_inv_matrix.kron(second.f_matrix) + first.f_matrix.kron(second.identity())
    weights = tuple(a + b for a in first.weights for b in second.weights)
    return Module(f"{first.name}(x){second.name}", weights, e_matrix, f_matrix)


@lru_cache(maxsize=None)
def represent_monomial(monomial: PbwMonomial, target: Module) -> AlgebraMatrix:
    a, b, c = monomial
    return (target.f_matrix ** a) @ target.k_power(b) @ (target.e_matrix ** c)


def represent(u: PbwElement, target: Module) -> AlgebraMatrix:
    """pi_V(u)."""
    result = AlgebraMatrix.zeros(target.dimension, target.dimension, ZERO)
    for monomial, coefficient in u.terms.items():
        result = result + represent_monomial(monomial, target) * coefficient
    return result


def represent_tensor(t: TensorElement, targets: Sequence[Module]) -> AlgebraMatrix:
    """(pi_1 (x) ... (x) pi_n)(t) on the tensor product of the target modules."""
    if len(targets) != t.arity:
        raise ValueError(f"Need {t.arity} modules, got {len(targets)}")
    dimension = 1
    for target in targets:
        dimension *= target.dimension
    result = AlgebraMatrix.zeros(dimension, dimension, ZERO)
    for key, coefficient in t.terms.items():
        factor = represent_monomial(key[0], targets[0])
        for monomial, target in zip(key[1:], targets[1:]):
            factor = factor.kron(represent_monomial(monomial, target))
        result = result + factor * coefficient
    return result


def partial_represent(t: TensorElement, target: Module) -> AlgebraMatrix:
    """(pi_V (x) id)(t): the first leg is represented, entries are TensorElements of arity n - 1."""
    rest_arity = t.arity - 1
    if rest_arity < 1:
        raise ValueError("partial_represent needs at least two legs")
    zero = TensorElement(rest_arity)
    data = [[zero] * target.dimension for _ in range(target.dimension)]
    for key, coefficient in t.terms.items():
        rest = TensorElement(rest_arity, {key[1:]: coefficient})
        for i, j, entry in represent_monomial(key[0], target).entries():
            data[i][j] = data[i][j] + rest * entry
    return AlgebraMatrix(data, zero)


def quantum_trace(matrix: AlgebraMatrix, target: Module):
    """qTr_V(A) = Tr(pi_V(K) A)."""
    if matrix.shape != (target.dimension, target.dimension):
        raise ValueError(f"Matrix shape {matrix.shape} does not match {target!r}")
    total = matrix.zero
    for j, mu in enumerate(target.weights):
        entry = matrix[j, j]
        if entry:
            total = total + entry * q_power(mu)
    return total


def quantum_dimension(target: Module):
    return quantum_trace(target.identity(), target)


def representation_residuals(target: Module):
    """Defining relations of U_q(sl2) on the module's generator images; all must vanish."""
    e, f = target.e_matrix, target.f_matrix
    k, k_inv = target.k_matrix, target.k_inv_matrix
    return {
        "K E K^-1 = q^2 E": k @ e @ k_inv - e * q_power(2),
        "K F K^-1 = q^-2 F": k @ f @ k_inv - f * q_power(-2),
        "E F - F E = [K;0]": (e @ f - f @ e) * Q_DIFF - (k - k_inv),
    }
