"""
Truncated Verma module with symbolic highest weight x.

Basis v_0, ..., v_N with

    K v_n = x q^{-2n} v_n
    F v_n = v_{n+1}
    E v_n = [n] (q^{-(n-1)} x - q^{n-1} x^{-1}) / (q - q^{-1}) v_{n-1}

Coefficients live in the bivariate function field Q(v, x) and are Laurent
polynomials in x. Acting on v_m by an element whose F-degree would leave the
span of v_0..v_N raises TruncationExceeded.
"""

from typing import List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.fields import field
from sympy.polys.matrices import DomainMatrix

from common.logging_utils import get_logger
from scalar import as_ratfunc
from scalar.laurent import LAURENT_FIELD, LAURENT_RING
from uqsl2.configs.uqsl2_config import config
from uqsl2.errors import TruncationExceeded
from uqsl2.pbw import PbwElement, PbwMonomial, normal_form_product

logger = get_logger("uqsl2")

VERMA_FIELD, FIELD_V, FIELD_X = field("v,x", QQ)
VERMA_RING = VERMA_FIELD.ring


def from_ratfunc(value) -> object:
    """Embed a rational function of v into Q(v, x)."""
    frac = as_ratfunc(value).frac
    numer = VERMA_RING.from_dict({(k, 0): c for (k,), c in frac.numer.items()})
    denom = VERMA_RING.from_dict({(k, 0): c for (k,), c in frac.denom.items()})
    return VERMA_FIELD.new(numer, denom)


def _q(k: int):
    return FIELD_V ** (2 * k)


def _q_int(n: int):
    return (_q(n) - _q(-n)) / (_q(1) - _q(-1))


def _e_factor(n: int):
    """Coefficient of v_{n-1} in E v_n."""
    if n == 0:
        return VERMA_FIELD.zero
    return _q_int(n) * (_q(-(n - 1)) * FIELD_X - _q(n - 1) / FIELD_X) / (_q(1) - _q(-1))


def _monomial_on_basis(monomial: PbwMonomial, index: int, truncation: int) -> Tuple[int, object]:
    """F^a K^b E^c v_index = coefficient * v_target, or (None, 0) when E kills it."""
    a, b, c = monomial
    if c > index:
        return None, VERMA_FIELD.zero
    coefficient = VERMA_FIELD.one
    for step in range(c):
        coefficient = coefficient * _e_factor(index - step)
    position = index - c
    weight = weight_value(position)
    if b >= 0:
        coefficient = coefficient * weight ** b
    else:
        coefficient = coefficient / weight ** (-b)
    target = position + a
    if target > truncation:
        raise TruncationExceeded(target, truncation)
    return target, coefficient


def verma_action(u: PbwElement, index: int, truncation: int = None) -> List[object]:
    """
    Image of v_index under u as the coefficient list on v_0..v_truncation.

    Raises:
        TruncationExceeded: if some term lands past v_truncation
    """
    truncation = config.verma_truncation if truncation is None else truncation
    if not 0 <= index <= truncation:
        raise TruncationExceeded(index, truncation)
    vector = [VERMA_FIELD.zero] * (truncation + 1)
    for monomial, coefficient in u.terms.items():
        target, value = _monomial_on_basis(monomial, index, truncation)
        if target is None or not value:
            continue
        vector[target] = vector[target] + from_ratfunc(coefficient) * value
    return vector


def verma_apply(u: PbwElement, vector: Sequence[object], truncation: int = None) -> List[object]:
    """Apply u to an arbitrary vector on v_0..v_truncation."""
    truncation = config.verma_truncation if truncation is None else truncation
    result = [VERMA_FIELD.zero] * (truncation + 1)
    for index, entry in enumerate(vector):
        if not entry:
            continue
        image = verma_action(u, index, truncation)
        for position, value in enumerate(image):
            if value:
                result[position] = result[position] + entry * value
    return result


def action_residual(u: PbwElement, w: PbwElement, index: int, truncation: int = None) -> List[object]:
    """verma(uw) v_index - verma(u)(verma(w) v_index); zero when the product is right."""
    truncation = config.verma_truncation if truncation is None else truncation
    direct = verma_action(normal_form_product(u, w), index, truncation)
    composed = verma_apply(u, verma_action(w, index, truncation), truncation)
    return [left - right for left, right in zip(direct, composed)]


def max_f_excess(u: PbwElement) -> int:
    """Largest a - c over the terms of u: how far u can push a basis vector up."""
    return max((m.f_exp - m.e_exp for m in u.terms), default=0)


def coefficient_family(elements: Sequence[PbwElement], truncation: int = None) -> List[List[object]]:
    """
    One row per element: its action on every v_m that stays inside the truncation,
    concatenated. Linear relations among the elements are relations among the rows.
    """
    truncation = config.verma_truncation if truncation is None else truncation
    reach = max((max_f_excess(u) for u in elements), default=0)
    top = truncation - max(reach, 0)
    if top < 0:
        raise TruncationExceeded(reach, truncation)
    rows = []
    for u in elements:
        row = []
        for index in range(top + 1):
            row.extend(verma_action(u, index, truncation))
        rows.append(row)
    return rows


def _x_expansion(value, v_value=None):
    """
    Split an entry x^{-k} n(v, x) / p(v) into {x-exponent: coefficient}.

    With v_value the coefficients are rationals at that point, otherwise exact
    elements of Q(v).
    """
    if not value:
        return {}
    denom_x = {monom[1] for monom in value.denom.keys()}
    if len(denom_x) != 1:
        raise ValueError(f"Verma coefficient is not a Laurent polynomial in x: {value}")
    shift = denom_x.pop()
    denom_v = {monom[0]: c for monom, c in value.denom.items()}
    grouped = {}
    for (i, j), c in value.numer.items():
        grouped.setdefault(j - shift, {})[i] = c
    if v_value is not None:
        denominator = sum(c * QQ(v_value) ** i for i, c in denom_v.items())
        if not denominator:
            raise ZeroDivisionError(f"Denominator vanishes at v={v_value}")
        return {
            exponent: QQ.quo(sum(c * QQ(v_value) ** i for i, c in terms.items()), denominator)
            for exponent, terms in grouped.items()
        }
    denominator = LAURENT_FIELD(LAURENT_RING.from_dict({(i,): c for i, c in denom_v.items()}))
    return {
        exponent: LAURENT_FIELD(LAURENT_RING.from_dict({(i,): c for i, c in terms.items()})) / denominator
        for exponent, terms in grouped.items()
    }


def _expanded_rows(rows, v_value=None):
    """Rows over Q(v) (or Q at v_value) indexed by (column, x-exponent)."""
    expanded = []
    for row in rows:
        coordinates = {}
        for column, entry in enumerate(row):
            for exponent, value in _x_expansion(entry, v_value).items():
                if value:
                    coordinates[(column, exponent)] = value
        expanded.append(coordinates)
    keys = sorted({key for coordinates in expanded for key in coordinates})
    return expanded, keys


def _rank(rows, v_value=None) -> int:
    expanded, keys = _expanded_rows(rows, v_value)
    if not keys:
        return 0
    domain = QQ if v_value is not None else LAURENT_FIELD.to_domain()
    zero = domain.zero
    matrix = [[coordinates.get(key, zero) for key in keys] for coordinates in expanded]
    return DomainMatrix(matrix, (len(matrix), len(keys)), domain).rank()


def linearly_independent(elements: Sequence[PbwElement], truncation: int = None) -> bool:
    """
    Whether the elements are linearly independent over Q(v), judged by their
    action on the truncated Verma module with x kept symbolic.

    Entries are Laurent polynomials in x; every x-coefficient is a coordinate.
    Full rank at a rational value of v already proves full rank over Q(v); the
    exact rank over Q(v) is only computed when every sample value is degenerate.
    """
    if not elements:
        return True
    rows = coefficient_family(elements, truncation)
    for v_value in (config.verma_sample_v, 3, 5):
        try:
            if _rank(rows, v_value) == len(rows):
                return True
        except ZeroDivisionError as e:
            logger.debug(f"Skipping sample point: {e}")
    logger.debug(f"No sample value of v separates {len(rows)} elements, computing exact rank")
    return _rank(rows) == len(rows)


def as_scalar_multiple(vector: Sequence[object], index: int):
    """c if vector = c v_index, else None."""
    for position, entry in enumerate(vector):
        if position != index and entry:
            return None
    return vector[index]


def weight_value(index: int):
    """Eigenvalue x q^{-2 index} of K on v_index."""
    return FIELD_X * _q(-2 * index)
