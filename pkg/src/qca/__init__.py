"""
Qca Package

Quantum coadjoint action at a primitive l-th root of unity: canonical lifts of
central elements, the derivations D_a, the sl2 triple E = z D_x, F = -z D_y,
H = -2 z^{-1} D_z and its diagonal version on L_{0,n}, truncated exponential
series, and the invariance and braid-intertwining checks.
"""

from qca.lifts import (
    LIFT_NAMES, CentralLift, central_lift, diagonal_lift, generic_lifts, loop_x_hat,
    site_coordinate_residuals,
)
from qca.derivations import (
    GENERATORS, DerivationValue, bracket_defect, derivation, extension_residual, leibniz_residual,
    lift_independence_residuals, limit_denominator, monomial_word, script_triple, slot_generators,
    triple_defect,
)
from qca.series import (
    CLOSED_FORMS, SERIES_TARGETS, TruncatedSeries, binomial_series, closed_exp_e, closed_exp_f,
    exp_series, generalized_binomial, psi_coefficient, series_residual,
)
from qca.suites import (
    braid_intertwining_residuals, derivation_value_residuals, eps_algebra_map, invariance_checks,
    invariance_residuals, invariance_suite, lift_independence_check, loop_triple_residuals,
    qca_checks, qca_suite, sl2_triple_checks, sl2_triple_suite, triple_residuals,
    well_defined_residuals,
)

__all__ = [
    'LIFT_NAMES', 'CentralLift', 'central_lift', 'diagonal_lift', 'generic_lifts', 'loop_x_hat',
    'site_coordinate_residuals',
    'GENERATORS', 'DerivationValue', 'bracket_defect', 'derivation', 'extension_residual',
    'leibniz_residual', 'lift_independence_residuals', 'limit_denominator', 'monomial_word',
    'script_triple', 'slot_generators', 'triple_defect',
    'CLOSED_FORMS', 'SERIES_TARGETS', 'TruncatedSeries', 'binomial_series', 'closed_exp_e',
    'closed_exp_f', 'exp_series', 'generalized_binomial', 'psi_coefficient', 'series_residual',
    'braid_intertwining_residuals', 'derivation_value_residuals', 'eps_algebra_map',
    'invariance_checks', 'invariance_residuals', 'invariance_suite', 'lift_independence_check',
    'loop_triple_residuals', 'qca_checks', 'qca_suite', 'sl2_triple_checks', 'sl2_triple_suite',
    'triple_residuals', 'well_defined_residuals',
]
