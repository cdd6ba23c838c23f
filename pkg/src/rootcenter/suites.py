"""
Identity checks at a root of unity: the frobenius suite (central l-th powers,
closed forms, the Chebyshev identity for Omega, the relation ideal, the
coproduct of the Frobenius matrix) and the threading suite.
"""

from itertools import combinations
from typing import Dict, List, Sequence

from common.logging_utils import get_logger
from scalar import Q_DIFF, q_binomial_vanishes
from uqsl2 import E, F, K, K_INV, UNIT, TensorElement, commutator, coproduct, coproduct_iterated
from harness.report import IdentityCheck, witness_of
from graphalg import loop_quantum_trace, tuple_product
from rootcenter.configs.rootcenter_config import config
from rootcenter.frobenius import (
    casimir_chebyshev_residuals, chebyshev_of, closed_form_residuals, eps_generators, eps_omega,
    fr_product, frobenius, generator_power, phi1_frobenius_lift,
)
from rootcenter.specialized import EpsTensorElement, specialize_element

logger = get_logger("rootcenter")


def centrality_residuals(element: EpsTensorElement, n: int, l: int) -> Dict[str, EpsTensorElement]:
    """[g, element] for the 4n generators of L_{0,n}^eps."""
    return {name: commutator(generator, element) for name, generator in eps_generators(n, l).items()}


def center_relation_residuals(n: int, l: int, site: int) -> Dict[str, EpsTensorElement]:
    """d^l T_l(omega) - d^{2l} - 1 - b^l c^l, and det(Fr M) - 1 at the same site."""
    image = frobenius(n, l, site)
    t_omega = chebyshev_of(eps_omega(n, l, site), l)
    d_power = image.d
    return {
        "d^l T_l(omega) - d^2l - 1 = b^l c^l": d_power * t_omega - d_power * d_power - 1 - image.b * image.c,
        "det Fr M = 1": image.determinant_residual(),
    }


def commutative_image_residuals(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """Pairwise commutators of all Frobenius images of the n sites."""
    images = {}
    for site in range(1, n + 1):
        for name, element in frobenius(n, l, site).entries().items():
            images[f"Fr({name}{site})"] = element
    return {f"[{left}, {right}]": commutator(images[left], images[right])
            for left, right in combinations(sorted(images), 2)}


def qbinomial_collapse_residuals(l: int) -> Dict[str, object]:
    """
    Delta of the small-center generators at eps, where the q-binomial
    coefficients [l choose k] vanish for 0 < k < l.
    """
    def at_eps(t):
        return specialize_element(t, l)

    y = F ** l * (Q_DIFF ** l)
    tensor = TensorElement.tensor
    return {
        "[l choose k] vanish": q_binomial_vanishes(l),
        "Delta(K^-l)": at_eps(coproduct(K_INV ** l)) - at_eps(tensor(K_INV ** l, K_INV ** l)),
        "Delta(y)": at_eps(coproduct(y)) - at_eps(tensor(K_INV ** l, y) + tensor(y, UNIT)),
        "Delta(E^l)": at_eps(coproduct(E ** l)) - at_eps(tensor(E ** l, K ** l) + tensor(UNIT, E ** l)),
    }


def coproduct_frobenius_residuals(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """Delta^{(n-1)}(Phi_1(Fr M)) - Phi_n(Fr M^{(1)} ... Fr M^{(n)}), entrywise."""
    lifts = phi1_frobenius_lift(l)
    product = fr_product(n, l, list(range(1, n + 1)))
    residuals = {}
    for name, (i, j) in zip("abcd", ((0, 0), (0, 1), (1, 0), (1, 1))):
        left = specialize_element(coproduct_iterated(lifts[name], n), l)
        residuals[name] = left - product[i][j]
    return residuals


# ----------------------------------------------------------------------
# threading
# ----------------------------------------------------------------------
def threaded_trace(n: int, l: int, sites: Sequence[int]) -> EpsTensorElement:
    """T_l(qTr(M^{(i_1)} ... M^{(i_k)})) at eps."""
    trace = loop_quantum_trace(tuple_product(n, sites))
    return chebyshev_of(specialize_element(trace.canonical, l), l)


def threading_residual(n: int, l: int, sites: Sequence[int]) -> EpsTensorElement:
    """T_l(qTr(M^{(i_1)} ... M^{(i_k)})) - Tr(Fr M^{(i_1)} ... Fr M^{(i_k)})."""
    product = fr_product(n, l, list(sites))
    return threaded_trace(n, l, sites) - (product[0][0] + product[1][1])


def threading_tuples(n: int, general: bool = None) -> List[tuple]:
    general = config.general_tuples if general is None else general
    longest = min(n, config.max_threading_sites)
    tuples = []
    for k in range(1, longest + 1):
        for sites in combinations(range(1, n + 1), k):
            consecutive = sites[-1] - sites[0] == k - 1
            if consecutive or general:
                tuples.append(sites)
    return tuples


def _label(sites: Sequence[int]) -> str:
    return "".join(map(str, sites))


def _check(identity_id: str, citation: str, evaluate, **inputs) -> IdentityCheck:
    return IdentityCheck(identity_id, citation, inputs, evaluate)


def threading_identity_checks(n: int, l: int, sites: Sequence[int]) -> List[IdentityCheck]:
    sites = tuple(sites)
    if list(sites) != sorted(set(sites)) or not sites or sites[0] < 1 or sites[-1] > n:
        raise ValueError(f"Sites {sites} must increase within 1..{n}")
    label = _label(sites)
    return [
        _check(f"threading.trace.n{n}.l{l}.sites{label}",
               "T_l(qTr(M(i1) ... M(ik))) = Tr(Fr M(i1) ... Fr M(ik))",
               lambda: witness_of(threading_residual(n, l, sites)), n=n, l=l, sites=list(sites)),
        _check(f"threading.central.n{n}.l{l}.sites{label}",
               "the threaded trace commutes with every generator",
               lambda: witness_of(centrality_residuals(threaded_trace(n, l, sites), n, l)),
               n=n, l=l, sites=list(sites)),
    ]


def threading_checks(n: int, l: int) -> List[IdentityCheck]:
    checks = []
    for sites in threading_tuples(n):
        checks.extend(threading_identity_checks(n, l, sites))
    return checks


def threading_identity(n: int, l: int, sites: Sequence[int], jobs: int = 1):
    """Run the threading identity and its centrality for one site tuple."""
    from harness.runner import run_checks
    return run_checks(threading_identity_checks(n, l, sites), "threading", jobs,
                      {"n": n, "l": l, "sites": list(sites)})


# ----------------------------------------------------------------------
# frobenius suite
# ----------------------------------------------------------------------
def frobenius_checks(n: int, l: int) -> List[IdentityCheck]:
    checks = [
        _check(f"frobenius.chebyshev_casimir.l{l}",
               "T_l(Omega) = (eps - eps^-1)^2l E^l F^l + K^l + K^-l",
               lambda: witness_of(casimir_chebyshev_residuals(l)), l=l),
        _check(f"frobenius.qbinomial.l{l}",
               "Delta of K^-l, (eps - eps^-1)^l F^l and E^l collapse at eps",
               lambda: witness_of(qbinomial_collapse_residuals(l)), l=l),
    ]
    for site in range(1, n + 1):
        for name in ("b", "c", "d"):
            checks.append(_check(
                f"frobenius.central.n{n}.l{l}.{name}{site}",
                f"{name}(i)^l is central in L_0,n at eps",
                lambda name=name, site=site: witness_of(
                    centrality_residuals(generator_power(n, l, f"{name}{site}"), n, l)),
                n=n, l=l, site=site))
        checks.append(_check(
            f"frobenius.central.n{n}.l{l}.omega{site}",
            "omega(i) is central in L_0,n at eps",
            lambda site=site: witness_of(centrality_residuals(eps_omega(n, l, site), n, l)),
            n=n, l=l, site=site))
        checks.append(_check(
            f"frobenius.closed_form.n{n}.l{l}.site{site}",
            "l-th powers of b(i), c(i), d(i) match their closed forms in x, y, z",
            lambda site=site: witness_of(closed_form_residuals(n, l, site)),
            n=n, l=l, site=site))
        checks.append(_check(
            f"frobenius.center_relation.n{n}.l{l}.site{site}",
            "d(i)^l T_l(omega(i)) - d(i)^2l - 1 = b(i)^l c(i)^l",
            lambda site=site: witness_of(center_relation_residuals(n, l, site)),
            n=n, l=l, site=site))
    if n <= 2:
        checks.append(_check(
            f"frobenius.commutative.n{n}.l{l}",
            "Fr maps onto a commutative subalgebra",
            lambda: witness_of(commutative_image_residuals(n, l)), n=n, l=l))
    if n >= 2:
        checks.append(_check(
            f"frobenius.coproduct.n{n}.l{l}",
            "Delta(Fr M) = Fr M(1) ... Fr M(n), the four entry equations",
            lambda: witness_of(coproduct_frobenius_residuals(n, l)), n=n, l=l))
    return checks


def centrality_suite(n: int, l: int, jobs: int = 1):
    """Run the frobenius suite for L_{0,n} at a primitive l-th root of unity."""
    from harness.runner import run_checks
    logger.info(f"Checking the center of L_0,{n} at a primitive {l}-th root of unity")
    return run_checks(frobenius_checks(n, l), "frobenius", jobs, {"n": n, "l": l})
