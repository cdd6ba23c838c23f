"""
Skein Package

Wilson loops on the punctured disk: the Kauffman skein relations of the
specialized R-matrix, the images of boundary and consecutive-puncture curves
in L_{0,n}, and the Chebyshev-threaded central elements at a root of unity.
"""

from skein.errors import CurveSpecError, SkeinError
from skein.curves import CURVE_KINDS, CurveSpec, parse_curve, wilson_curve
from skein.kauffman import (
    braiding_matrix, eigenvalue_residuals, intertwiner_residuals, kauffman_checks,
    kauffman_projector, kauffman_r_identity, loop_value, loop_value_residuals,
    rank_one_residuals, skein_relation_residuals,
)
from skein.suites import (
    boundary_monomials, boundary_residuals, chebyshev_center_checks, chebyshev_center_suite,
    coefficient_rank, commutativity_residuals, consecutive_arcs, curve_checks,
    exponent_tuples, factorization_residuals, independence_witness, linking_residuals,
    skein_checks, skein_suite, curve_threading_residual,
)

__all__ = [
    'CurveSpecError', 'SkeinError',
    'CURVE_KINDS', 'CurveSpec', 'parse_curve', 'wilson_curve',
    'braiding_matrix', 'eigenvalue_residuals', 'intertwiner_residuals', 'kauffman_checks',
    'kauffman_projector', 'kauffman_r_identity', 'loop_value', 'loop_value_residuals',
    'rank_one_residuals', 'skein_relation_residuals',
    'boundary_monomials', 'boundary_residuals', 'chebyshev_center_checks',
    'chebyshev_center_suite', 'coefficient_rank', 'commutativity_residuals', 'consecutive_arcs',
    'curve_checks', 'exponent_tuples', 'factorization_residuals', 'independence_witness',
    'linking_residuals', 'skein_checks', 'skein_suite', 'curve_threading_residual',
]
