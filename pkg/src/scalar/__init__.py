"""
Scalar Package

Exact coefficient tower: Laurent polynomials and reduced rational functions in
v = q^{1/2} over Q, and the cyclotomic fields Q[x]/Phi_{4l} holding eps,
eps^{1/2}, i and zeta, with specialization between them.
"""

from scalar.errors import ScalarError, NotInvertible, PoleAtSpecialization
from scalar.laurent import LaurentPoly
from scalar.ratfunc import (
    RatFunc, as_ratfunc, v_power, q_power, q_int, q_factorial, q_binomial,
    ONE, ZERO, V, Q, Q_DIFF,
)
from scalar.cyclotomic import (
    Cyclotomic, RootOfUnity, root_of_unity, cyclotomic_polynomial, specialize,
    evaluate_laurent, q_binomial_vanishes,
)
from scalar.chebyshev import chebyshev, chebyshev_apply, chebyshev_compose, evaluate_polynomial

__all__ = [
    'ScalarError', 'NotInvertible', 'PoleAtSpecialization',
    'LaurentPoly', 'RatFunc', 'as_ratfunc',
    'v_power', 'q_power', 'q_int', 'q_factorial', 'q_binomial',
    'ONE', 'ZERO', 'V', 'Q', 'Q_DIFF',
    'Cyclotomic', 'RootOfUnity', 'root_of_unity', 'cyclotomic_polynomial', 'specialize',
    'evaluate_laurent', 'q_binomial_vanishes',
    'chebyshev', 'chebyshev_apply', 'chebyshev_compose', 'evaluate_polynomial',
]
