"""
Normalized Chebyshev polynomials T_0 = 2, T_1 = x, T_k = x T_{k-1} - T_{k-2}.

They satisfy T_k(u + u^{-1}) = u^k + u^{-k} and T_{ab} = T_a o T_b.
"""

from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

CHEBYSHEV_RING, _T = ring("t", ZZ)


@lru_cache(maxsize=None)
def chebyshev(k: int):
    """T_k as an integer polynomial in t."""
    if k < 0:
        raise ValueError(f"Chebyshev index must be nonnegative, got {k}")
    if k == 0:
        return CHEBYSHEV_RING(2)
    if k == 1:
        return _T
    return _T * chebyshev(k - 1) - chebyshev(k - 2)


def evaluate_polynomial(poly, x, one):
    """
    Horner evaluation of an integer polynomial at x.

    `one` is the unit of the ring x lives in; x may belong to any ring whose
    elements support +, * and integer scaling, commutative or not.
    """
    degree = poly.degree()
    if degree < 0:
        return one * 0
    coefficients = {monom[0]: int(c) for monom, c in poly.items()}
    result = one * coefficients.get(degree, 0)
    for k in range(degree - 1, -1, -1):
        result = result * x
        c = coefficients.get(k, 0)
        if c:
            result = result + one * c
    return result


def chebyshev_apply(k: int, x, one):
    """T_k(x) in the ring of x."""
    return evaluate_polynomial(chebyshev(k), x, one)


def chebyshev_compose(a: int, b: int):
    """T_a(T_b(t)) computed by polynomial composition."""
    return chebyshev(a).compose(_T, chebyshev(b))
