"""
Poisson Package

The classical side: commutative polynomials in normal form, the Fock-Rosly
bracket on O(G^n), the bracket of the small center Z_0 in the coordinates
x, y, z (from a closed table and from the derivations D_a), the group law of
Spec Z_0 with psi and sigma, the dressing of the Frobenius matrices, and the
check that Fr is a Poisson map.
"""

from poisson.commpoly import (
    COORDINATE_NAMES, DRESSING_NAMES, ENTRY_NAMES, CommPoly, VariableSpace, coordinate_space,
    determinant, dressing_space, inverse_unimodular, matmul2, matrix_space,
)
from poisson.coordinates import (
    coordinate_monomial, from_coordinates, from_dressing, odd_square_root_terms, to_coordinates,
    to_dressing,
)
from poisson.brackets import (
    PoissonBracketTable, casimir_residuals, classical_invariance_residuals, classical_r_matrix,
    conjugation_field, cross_site_bracket_matrix, fr_bracket, model_agreement_residuals,
    poisson_casimir, qca_bracket_derived, qca_bracket_from_derivations, qca_bracket_model,
    single_site_bracket_matrix, trace_function,
)
from poisson.dressing import (
    conjugated_matrix, dressed_frobenius_matrix, dressing_matrix, dressing_product,
    dressing_residuals, group_law, group_law_residuals, minus_matrix, pair_inverse, pair_product,
    plus_matrix, psi, script_m,
)
from poisson.morphism import (
    apply_frobenius, fr_poisson_residual, fr_poisson_residuals, fr_side, frobenius_coordinates,
    frobenius_determinants, generator_pairs, qca_side,
)
from poisson.suites import (
    bracket_checks, dressing_checks, dressing_identity, dressing_suite, dressing_suite_checks,
    fr_is_poisson, fr_is_poisson_checks, group_law_and_psi, group_law_checks, poisson_checks,
    poisson_suite,
)
from poisson.errors import NotInSmallCenter, PoissonError

__all__ = [
    'COORDINATE_NAMES', 'DRESSING_NAMES', 'ENTRY_NAMES', 'CommPoly', 'VariableSpace',
    'coordinate_space', 'determinant', 'dressing_space', 'inverse_unimodular', 'matmul2',
    'matrix_space',
    'coordinate_monomial', 'from_coordinates', 'from_dressing', 'odd_square_root_terms',
    'to_coordinates', 'to_dressing',
    'PoissonBracketTable', 'casimir_residuals', 'classical_invariance_residuals',
    'classical_r_matrix', 'conjugation_field', 'cross_site_bracket_matrix', 'fr_bracket',
    'model_agreement_residuals', 'poisson_casimir', 'qca_bracket_derived',
    'qca_bracket_from_derivations', 'qca_bracket_model', 'single_site_bracket_matrix',
    'trace_function',
    'conjugated_matrix', 'dressed_frobenius_matrix', 'dressing_matrix', 'dressing_product',
    'dressing_residuals', 'group_law', 'group_law_residuals', 'minus_matrix', 'pair_inverse',
    'pair_product', 'plus_matrix', 'psi', 'script_m',
    'apply_frobenius', 'fr_poisson_residual', 'fr_poisson_residuals', 'fr_side',
    'frobenius_coordinates', 'frobenius_determinants', 'generator_pairs', 'qca_side',
    'bracket_checks', 'dressing_checks', 'dressing_identity', 'dressing_suite', 'dressing_suite_checks',
    'fr_is_poisson', 'fr_is_poisson_checks', 'group_law_and_psi', 'group_law_checks', 'poisson_checks',
    'poisson_suite',
    'NotInSmallCenter', 'PoissonError',
]
