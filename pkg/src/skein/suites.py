"""
Identity checks for Wilson loops: boundary curves give omega^{(i)} and eta,
those images commute and generate a polynomial algebra, arc traces factor
through the iterated coproduct, and threading an arc with T_l gives a central
element equal to the trace of the Frobenius matrices.
"""

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from common.logging_utils import get_logger
from scalar import Q, q_power, root_of_unity
from uqsl2 import TensorElement, commutator
from graphalg import coproduct_image, eta, omega, phi1_matrix
from harness.report import IdentityCheck, witness_of
from rootcenter import centrality_residuals, fr_product
from skein.configs.skein_config import config
from skein.curves import CurveSpec, wilson_curve
from skein.kauffman import kauffman_checks

logger = get_logger("skein")


def consecutive_arcs(n: int) -> List[CurveSpec]:
    return [CurveSpec.arc(first, last - first + 1)
            for first in range(1, n + 1) for last in range(first, n + 1)]


def boundary_residuals(n: int) -> Dict[str, TensorElement]:
    """W of the boundary curves against omega^{(i)} and eta, and the degenerate arcs."""
    residuals = {}
    for site in range(1, n + 1):
        expected = omega(n, site).canonical
        residuals[f"W(boundary:{site}) = omega{site}"] = \
            wilson_curve(CurveSpec.boundary(site), n).canonical - expected
        residuals[f"W(arc:{site}..{site}) = omega{site}"] = \
            wilson_curve(CurveSpec.arc(site, 1), n).canonical - expected
    residuals["W(outer) = eta"] = wilson_curve(CurveSpec.outer(), n).canonical - eta(n).canonical
    residuals[f"W(arc:1..{n}) = eta"] = wilson_curve(CurveSpec.arc(1, n), n).canonical - eta(n).canonical
    return residuals


def boundary_images(n: int) -> List[Tuple[str, TensorElement]]:
    images = [(f"omega{site}", omega(n, site).canonical) for site in range(1, n + 1)]
    images.append(("eta", eta(n).canonical))
    return images


def commutativity_residuals(n: int) -> Dict[str, TensorElement]:
    return {f"[{a}, {b}]": commutator(x, y)
            for (a, x), (b, y) in combinations(boundary_images(n), 2)}


def factorization_residuals(n: int) -> Dict[str, TensorElement]:
    """
    qTr(M^{(i)} ... M^{(n)}) against 1^{(x) i-1} (x) qTr of the iterated coproduct
    of the Phi_1 matrix.
    """
    residuals = {}
    for first in range(1, n + 1):
        arity = n - first + 1
        diagonal = [coproduct_image(arity, phi1_matrix()[k, k]).canonical for k in range(2)]
        image = diagonal[0] * Q + diagonal[1] * q_power(-1)
        if first > 1:
            image = TensorElement.tensor(TensorElement.identity(first - 1), image)
        spec = CurveSpec.arc(first, arity)
        residuals[f"W({spec}) through Delta"] = wilson_curve(spec, n).canonical - image
    return residuals


# ----------------------------------------------------------------------
# independence of monomials in the boundary images
# ----------------------------------------------------------------------
def exponent_tuples(variables: int, degree: int) -> List[Tuple[int, ...]]:
    """All exponent tuples of total degree <= degree, in graded order."""
    if variables == 0:
        return [()]
    tuples = []
    for total in range(degree + 1):
        tuples.extend(_compositions(variables, total))
    return tuples


def _compositions(variables: int, total: int) -> List[Tuple[int, ...]]:
    if variables == 1:
        return [(total,)]
    result = []
    for first in range(total, -1, -1):
        for rest in _compositions(variables - 1, total - first):
            result.append((first,) + rest)
    return result


def boundary_monomials(n: int, degree: int) -> Dict[Tuple[int, ...], TensorElement]:
    """
    omega1^e1 ... omegan^en eta^e for every exponent tuple of degree <= degree;
    for n = 1 eta is omega1 and is left out.
    """
    images = [element for _, element in boundary_images(n)]
    if n == 1:
        images = images[:1]
    monomials = {}
    for exponents in exponent_tuples(len(images), degree):
        nonzero = [k for k, e in enumerate(exponents) if e]
        if not nonzero:
            monomials[exponents] = TensorElement.identity(n)
            continue
        last = nonzero[-1]
        lower = list(exponents)
        lower[last] -= 1
        monomials[exponents] = monomials[tuple(lower)] * images[last]
    return monomials


def _at_rational(value, point: int):
    def evaluate(poly):
        return sum((QQ(c.numerator, c.denominator) * QQ(point) ** k
                    for k, c in poly.coefficients.items()), QQ(0))

    denominator = evaluate(value.denominator)
    if not denominator:
        raise ZeroDivisionError(f"Denominator of {value} vanishes at v={point}")
    return QQ.quo(evaluate(value.numerator), denominator)


def coefficient_rank(elements: Sequence[TensorElement], point: int) -> int:
    """Rank of the coefficient vectors of the elements at v = point."""
    keys = list(dict.fromkeys(key for element in elements for key in element.terms))
    if not keys:
        return 0
    column = {key: index for index, key in enumerate(keys)}
    rows = []
    for element in elements:
        row = [QQ(0)] * len(keys)
        for key, coefficient in element.terms.items():
            row[column[key]] = _at_rational(coefficient, point)
        rows.append(row)
    return DomainMatrix(rows, (len(rows), len(keys)), QQ).rank()


def independence_witness(n: int, degree: int = None, points: Iterable[int] = None) -> Optional[str]:
    """
    None when the monomials of degree <= degree in omega(1), ..., omega(n), eta are
    linearly independent; full rank at one rational v already proves it over Q(v).
    """
    degree = config.monomial_degree if degree is None else degree
    points = (config.sample_v, 3, 5) if points is None else points
    monomials = boundary_monomials(n, degree)
    elements = list(monomials.values())
    best = 0
    for point in points:
        try:
            rank = coefficient_rank(elements, point)
        except ZeroDivisionError as e:
            logger.debug(f"Skipping sample point: {e}")
            continue
        logger.debug(f"{len(elements)} monomials of degree <= {degree}, rank {rank} at v={point}")
        if rank == len(elements):
            return None
        best = max(best, rank)
    return f"rank {best} < {len(elements)} monomials at every sample point"


# ----------------------------------------------------------------------
# threading curves at a root of unity
# ----------------------------------------------------------------------
def curve_threading_residual(spec: CurveSpec, n: int, l: int):
    """T_l(W(arc)) - Tr(Fr M^{(i)} ... Fr M^{(j)})."""
    threaded = CurveSpec.arc(spec.site, spec.length, l)
    product = fr_product(n, l, list(threaded.sites(n)))
    return wilson_curve(threaded, n, l) - (product[0][0] + product[1][1])


def linking_residuals(l: int) -> Dict[str, object]:
    """i^lk normalization on the boundary of a single puncture."""
    plain = wilson_curve(CurveSpec.boundary(1), 1, l)
    i = root_of_unity(l).i
    return {
        "W(@1) = i W": wilson_curve(CurveSpec.boundary(1, linking=1), 1, l) - plain * i,
        "W(@2) = -W at generic q": wilson_curve(CurveSpec.boundary(1, linking=2), 1).canonical
        + wilson_curve(CurveSpec.boundary(1), 1).canonical,
    }


def _check(identity_id: str, citation: str, evaluate, **inputs) -> IdentityCheck:
    return IdentityCheck(identity_id, citation, inputs, evaluate)


def curve_checks(curves: Iterable[CurveSpec], n: int, l: int) -> List[IdentityCheck]:
    """Centrality at eps of the given curves, and the threading identity for arcs threaded with T_l."""
    checks = []
    for spec in curves:
        spec.validate(n)
        checks.append(_check(
            f"skein.curve.central.n{n}.l{l}.{spec}", "the Wilson loop is central at eps",
            lambda spec=spec: witness_of(centrality_residuals(wilson_curve(spec, n, l), n, l)),
            n=n, l=l, curve=str(spec)))
        if spec.kind != "boundary" and spec.power == l and not spec.linking:
            arc = CurveSpec.arc(1, n) if spec.kind == "outer" else spec
            checks.append(_check(
                f"skein.curve.threading.n{n}.l{l}.{spec}", "T_l(W) = Tr(Fr M(i) ... Fr M(j))",
                lambda arc=arc: witness_of(curve_threading_residual(arc, n, l)),
                n=n, l=l, curve=str(spec)))
    return checks


def chebyshev_center_checks(n: int, l: int) -> List[IdentityCheck]:
    checks = []
    for spec in consecutive_arcs(n):
        threaded = CurveSpec.arc(spec.site, spec.length, l)
        checks.append(_check(
            f"skein.chebyshev.central.n{n}.l{l}.{spec}", "T_l(W(arc)) is central at eps",
            lambda threaded=threaded: witness_of(
                centrality_residuals(wilson_curve(threaded, n, l), n, l)),
            n=n, l=l, curve=str(threaded)))
        checks.append(_check(
            f"skein.chebyshev.threading.n{n}.l{l}.{spec}", "T_l(W(arc)) = Tr(Fr M(i) ... Fr M(j))",
            lambda spec=spec: witness_of(curve_threading_residual(spec, n, l)),
            n=n, l=l, curve=str(threaded)))
    checks.append(_check(
        f"skein.boundary_commutative.n{n}", "omega(i) and eta pairwise commute",
        lambda: witness_of(commutativity_residuals(n)), n=n))
    return checks


def chebyshev_center_suite(n: int, l: int, jobs: int = 1):
    """Threaded arcs are central and equal to traces of Frobenius matrices."""
    from harness.runner import run_checks
    logger.info(f"Checking threaded Wilson loops for n={n}, l={l}")
    return run_checks(chebyshev_center_checks(n, l), "skein", jobs, {"n": n, "l": l})


def skein_checks(n: int, l: int, degree: int = None, curves: Iterable[CurveSpec] = ()) -> List[IdentityCheck]:
    degree = config.monomial_degree if degree is None else degree
    checks = kauffman_checks(l)
    checks.append(_check(f"skein.boundary.n{n}", "boundary curves map to omega(i) and eta",
                         lambda: witness_of(boundary_residuals(n)), n=n))
    checks.append(_check(f"skein.factorization.n{n}", "arc traces factor through the iterated coproduct",
                         lambda: witness_of(factorization_residuals(n)), n=n))
    checks.append(_check(f"skein.linking.l{l}", "W = i^lk times the Wilson value",
                         lambda: witness_of(linking_residuals(l)), l=l))
    if n <= config.independence_max_n:
        checks.append(_check(
            f"skein.independence.n{n}.deg{degree}",
            "monomials in omega(1), ..., omega(n), eta are linearly independent",
            lambda: independence_witness(n, degree), n=n, degree=degree, sample_v=config.sample_v))
    checks.extend(chebyshev_center_checks(n, l))
    checks.extend(curve_checks(curves, n, l))
    return checks


def skein_suite(n: int, l: int, degree: int = None, curves: Iterable[CurveSpec] = (), jobs: int = 1):
    from harness.runner import run_checks
    logger.info(f"Checking the skein identities for n={n}, l={l}")
    curves = list(curves)
    degree = config.monomial_degree if degree is None else degree
    return run_checks(skein_checks(n, l, degree, curves), "skein", jobs,
                      {"n": n, "l": l, "degree": degree, "curves": [str(c) for c in curves]})
