"""
Repv Package

Finite-dimensional weight modules V_m of U_q(sl2), the R-matrix on their tensor
products, quantum traces with pivot K, and the AlgebraMatrix container used for
matrices with algebra-valued entries.
"""

from repv.matrix import AlgebraMatrix, embed_legs, flip_matrix
from repv.modules import (
    Module, module, tensor_module, represent, represent_monomial, represent_tensor,
    partial_represent, quantum_trace, quantum_dimension, representation_residuals,
)
from repv.rmatrix import (
    r_matrix, r_matrix_inverse, r_matrix_21, r_coefficient, yang_baxter_residual,
    intertwining_residual, has_odd_laurent_entries, rsd_matrix,
)

__all__ = [
    'AlgebraMatrix', 'embed_legs', 'flip_matrix',
    'Module', 'module', 'tensor_module', 'represent', 'represent_monomial', 'represent_tensor',
    'partial_represent', 'quantum_trace', 'quantum_dimension', 'representation_residuals',
    'r_matrix', 'r_matrix_inverse', 'r_matrix_21', 'r_coefficient', 'yang_baxter_residual',
    'intertwining_residual', 'has_odd_laurent_entries', 'rsd_matrix',
]
