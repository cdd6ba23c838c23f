"""
The R-matrix on V2 (x) V2 at v = eps^{1/2} and the Kauffman skein relations.

With r = i P R (P the flip) and zeta = i eps^{1/2}, the projector
U = zeta (r - zeta) satisfies

    r = zeta + zeta^-1 U,    r^-1 = zeta^-1 + zeta U,    U^2 = -(zeta^2 + zeta^-2) U,

which are the crossing relation and the value of a trivial loop.
"""

from typing import Dict, List

from common.logging_utils import get_logger
from scalar import specialize, root_of_unity
from repv import AlgebraMatrix, flip_matrix, module, quantum_dimension, r_matrix, tensor_module
from graphalg import temperley_lieb_projector
from harness.report import IdentityCheck, witness_of

logger = get_logger("skein")


def _at_eps(matrix: AlgebraMatrix, l: int) -> AlgebraMatrix:
    root = root_of_unity(l)
    return matrix.map(lambda entry: specialize(entry, root.point), root.scalar(0))


def braiding_matrix(l: int) -> AlgebraMatrix:
    """i P R_{V2,V2} with entries in Q(zeta)."""
    root = root_of_unity(l)
    flip = flip_matrix(2, 2, root.scalar(1), root.scalar(0))
    return (flip @ _at_eps(r_matrix(2, 2), l)) * root.i


def kauffman_projector(l: int) -> AlgebraMatrix:
    """U = zeta (r - zeta id)."""
    root = root_of_unity(l)
    identity = AlgebraMatrix.identity(4, root.scalar(1), root.scalar(0))
    return (braiding_matrix(l) - identity * root.zeta) * root.zeta


def loop_value(l: int):
    """-(zeta^2 + zeta^-2)."""
    zeta = root_of_unity(l).zeta
    return -(zeta ** 2 + zeta ** -2)


def skein_relation_residuals(l: int) -> Dict[str, object]:
    root = root_of_unity(l)
    zeta = root.zeta
    identity = AlgebraMatrix.identity(4, root.scalar(1), root.scalar(0))
    braiding, u = braiding_matrix(l), kauffman_projector(l)
    return {
        "r = zeta + zeta^-1 U": braiding - identity * zeta - u * zeta.inverse(),
        "U^2 = -(zeta^2 + zeta^-2) U": u @ u - u * loop_value(l),
        "r (zeta^-1 + zeta U) = 1": braiding @ (identity * zeta.inverse() + u * zeta) - identity,
    }


def intertwiner_residuals(l: int) -> Dict[str, AlgebraMatrix]:
    """[U, Delta(g)] on V2 (x) V2 for g in E, F, K, and U + U_TL at eps."""
    target = tensor_module(module(2), module(2))
    u = kauffman_projector(l)
    residuals = {}
    for name, action in (("E", target.e_matrix), ("F", target.f_matrix), ("K", target.k_matrix)):
        image = _at_eps(action, l)
        residuals[f"[U, {name}]"] = u @ image - image @ u
    residuals["U = -U_TL"] = u + _at_eps(temperley_lieb_projector(), l)
    return residuals


def rank_one_residuals(l: int) -> Dict[str, object]:
    """U is nonzero with trace equal to its idempotent scale, so U / scale has rank one."""
    u = kauffman_projector(l)
    return {
        "U != 0": not u.is_zero(),
        "Tr U = -(zeta^2 + zeta^-2)": u.trace() - loop_value(l),
    }


def loop_value_residuals(l: int) -> Dict[str, object]:
    """-(zeta^2 + zeta^-2) = eps + eps^-1 = [2] at eps."""
    root = root_of_unity(l)
    return {
        "-(zeta^2 + zeta^-2) = eps + eps^-1": loop_value(l) - (root.eps + root.eps.inverse()),
        "= qdim V2": loop_value(l) - specialize(quantum_dimension(module(2)), root.point),
    }


def eigenvalue_residuals(l: int) -> Dict[str, object]:
    """(r - zeta)(r + zeta^-3) = 0 and Tr r = 3 zeta - zeta^-3."""
    root = root_of_unity(l)
    zeta = root.zeta
    identity = AlgebraMatrix.identity(4, root.scalar(1), root.scalar(0))
    braiding = braiding_matrix(l)
    return {
        "(r - zeta)(r + zeta^-3) = 0":
            (braiding - identity * zeta) @ (braiding + identity * zeta ** -3),
        "Tr r = 3 zeta - zeta^-3": braiding.trace() - (zeta * 3 - zeta ** -3),
    }


def kauffman_checks(l: int) -> List[IdentityCheck]:
    def check(key: str, citation: str, residuals):
        return IdentityCheck(f"skein.kauffman.{key}.l{l}", citation, {"l": l},
                             lambda: witness_of(residuals(l)))

    return [
        check("relations", "r = zeta + zeta^-1 U, r^-1 = zeta^-1 + zeta U, U^2 = -(zeta^2 + zeta^-2) U",
              skein_relation_residuals),
        check("intertwiner", "U commutes with the action on V2 (x) V2 and factors through the trivial module",
              intertwiner_residuals),
        check("rank_one", "U has rank one", rank_one_residuals),
        check("loop_value", "the trivial loop is -(zeta^2 + zeta^-2) = eps + eps^-1", loop_value_residuals),
        check("eigenvalues", "r has eigenvalues zeta (three times) and -zeta^-3", eigenvalue_residuals),
    ]


def kauffman_r_identity(l: int, jobs: int = 1):
    """Run the skein relations of the specialized R-matrix."""
    from harness.runner import run_checks
    logger.info(f"Checking the Kauffman skein relations at l={l}")
    return run_checks(kauffman_checks(l), "skein", jobs, {"l": l})
