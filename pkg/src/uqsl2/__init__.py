"""
Uqsl2 Package

U_q(sl2) over Q(v) in the PBW basis F^a K^b E^c: normal-form products, tensor
powers, the Hopf maps, braid automorphisms, the truncated Verma module used as
an independent oracle, and the element text grammar.
"""

from uqsl2.errors import Uqsl2Error, TruncationExceeded, GrammarError
from uqsl2.algebra import LinearCombination, commutator
from uqsl2.pbw import (
    PbwMonomial, PbwElement, UNIT_MONOMIAL, E, F, K, K_INV, UNIT,
    k_power, q_bracket_k, monomial_product, normal_form_product, straighten,
)
from uqsl2.tensor import TensorElement, tensor_key_product
from uqsl2.hopf import (
    apply_algebra_map, coproduct, coproduct_opposite, coproduct_iterated, coproduct_at,
    iterated_generator_images, antipode, counit, antipode_axiom_residual,
    coassociativity_residual, multiply_legs, casimir, tau, tau_images, braid, braid_images,
    relation_residuals,
)
from uqsl2.verma import (
    VERMA_FIELD, verma_action, verma_apply, action_residual, coefficient_family,
    linearly_independent, as_scalar_multiple, weight_value, from_ratfunc,
)
from uqsl2.grammar import format_element, parse_element, parse_scalar

__all__ = [
    'Uqsl2Error', 'TruncationExceeded', 'GrammarError',
    'LinearCombination', 'commutator',
    'PbwMonomial', 'PbwElement', 'UNIT_MONOMIAL', 'E', 'F', 'K', 'K_INV', 'UNIT',
    'k_power', 'q_bracket_k', 'monomial_product', 'normal_form_product', 'straighten',
    'TensorElement', 'tensor_key_product',
    'apply_algebra_map', 'coproduct', 'coproduct_opposite', 'coproduct_iterated', 'coproduct_at',
    'iterated_generator_images', 'antipode', 'counit', 'antipode_axiom_residual',
    'coassociativity_residual', 'multiply_legs', 'casimir', 'tau', 'tau_images', 'braid',
    'braid_images', 'relation_residuals',
    'VERMA_FIELD', 'verma_action', 'verma_apply', 'action_residual', 'coefficient_family',
    'linearly_independent', 'as_scalar_multiple', 'weight_value', 'from_ratfunc',
    'format_element', 'parse_element', 'parse_scalar',
]
