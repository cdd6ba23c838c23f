"""
Rootcenter Package

L_{0,n}(sl2) at a primitive l-th root of unity eps (l odd): specialized tensor
elements, the Frobenius map into the center, closed forms of the central l-th
powers in the Z_0 coordinates x, y, z, and the frobenius and threading suites.
"""

from rootcenter.specialized import (
    EpsTensorElement, as_root, specialize_element, embed_at, coordinate_lifts, slot_coordinates,
)
from rootcenter.frobenius import (
    FrImage, frobenius, fr_product, chebyshev_of, eps_generators, eps_omega, generator_power,
    phi1_frobenius_lift, closed_b_power, closed_c_power, closed_d_power, closed_form_residuals,
    casimir_chebyshev_residuals, s_sum,
)
from rootcenter.suites import (
    centrality_residuals, center_relation_residuals, commutative_image_residuals,
    qbinomial_collapse_residuals, coproduct_frobenius_residuals, threaded_trace,
    threading_residual, threading_tuples, threading_identity_checks, threading_checks,
    threading_identity, frobenius_checks, centrality_suite,
)

__all__ = [
    'EpsTensorElement', 'as_root', 'specialize_element', 'embed_at', 'coordinate_lifts',
    'slot_coordinates',
    'FrImage', 'frobenius', 'fr_product', 'chebyshev_of', 'eps_generators', 'eps_omega',
    'generator_power', 'phi1_frobenius_lift', 'closed_b_power', 'closed_c_power',
    'closed_d_power', 'closed_form_residuals', 'casimir_chebyshev_residuals', 's_sum',
    'centrality_residuals', 'center_relation_residuals', 'commutative_image_residuals',
    'qbinomial_collapse_residuals', 'coproduct_frobenius_residuals', 'threaded_trace',
    'threading_residual', 'threading_tuples', 'threading_identity_checks', 'threading_checks',
    'threading_identity', 'frobenius_checks', 'centrality_suite',
]
