"""
Graphalg Package

The graph algebra L_{0,n}(sl2) realized inside U_q(sl2)^{(x) n} through the
Alekseev embedding: site matrices, loop elements with canonical images, the
presentation, alekseev and center identity suites, xi/delta and invariant
elements.
"""

from graphalg.errors import GraphAlgError, NotAnIntertwiner
from graphalg.alekseev import (
    GENERATOR_NAMES, GenMatrix, phi1_generators, phi1_matrix, gen_matrix, fused_site_matrix,
    conjugate_new_leg, conjugate_leg, extend_matrix,
)
from graphalg.loops import (
    LoopElement, loop_generators, site_loop_matrix, site_product, tuple_product, loop_quantum_trace,
    xi, xi_delta, coproduct_image, diagonal_generators, local_site_generators, local_slot_generators,
)
from graphalg.invariants import (
    omega, eta, coloring_module, lambda_matrix, temperley_lieb_projector, check_intertwiner,
    invariant_element, centrality_residuals, invariance_residuals,
)
from graphalg.presentation import (
    rel01_residuals, reflection_residual, exchange_residual, fusion_residual,
    explicit_pair_residual, product_residuals, injectivity_basis, surjectivity_residuals,
    presentation_checks, alekseev_checks, center_checks, verify_presentation,
)

__all__ = [
    'GraphAlgError', 'NotAnIntertwiner',
    'GENERATOR_NAMES', 'GenMatrix', 'phi1_generators', 'phi1_matrix', 'gen_matrix',
    'fused_site_matrix', 'conjugate_new_leg', 'conjugate_leg', 'extend_matrix',
    'LoopElement', 'loop_generators', 'site_loop_matrix', 'site_product', 'tuple_product',
    'loop_quantum_trace', 'xi', 'xi_delta',
    'coproduct_image', 'diagonal_generators', 'local_site_generators', 'local_slot_generators',
    'omega', 'eta', 'coloring_module', 'lambda_matrix', 'temperley_lieb_projector',
    'check_intertwiner', 'invariant_element', 'centrality_residuals', 'invariance_residuals',
    'rel01_residuals', 'reflection_residual', 'exchange_residual', 'fusion_residual',
    'explicit_pair_residual', 'product_residuals', 'injectivity_basis', 'surjectivity_residuals',
    'presentation_checks', 'alekseev_checks', 'center_checks', 'verify_presentation',
]
