"""
Identity checks for L_{0,n}(sl2) at generic q.

Three suites are built here:

    presentation  single-site relations, reflection, exchange and fusion equations
    alekseev      properties of the embedding itself (coproduct compatibility,
                  injectivity on a PBW-type basis, surjectivity after localization)
    center        central and invariant elements

Every check evaluates to None or a witness and can run on its own thread.
"""

from itertools import product
from typing import Dict, List

from common.config import config as app_config
from common.logging_utils import get_logger
from scalar import q_power
from uqsl2 import PbwElement, TensorElement, casimir, commutator, linearly_independent
from repv import AlgebraMatrix, embed_legs, r_matrix, r_matrix_21, r_matrix_inverse
from harness.report import IdentityCheck, equality_witness, witness_of
from graphalg.alekseev import (
    GENERATOR_NAMES, conjugate_leg, conjugate_new_leg, extend_matrix, fused_site_matrix,
    gen_matrix, phi1_generators, phi1_matrix,
)
from graphalg.invariants import (
    centrality_residuals, eta, invariance_residuals, invariant_element, omega,
    temperley_lieb_projector,
)
from graphalg.loops import (
    coproduct_image, expected_slot_images, local_site_generators, local_slot_generators,
    loop_quantum_trace, phi1_local_images, site_product, xi, xi_delta,
)

logger = get_logger("graphalg")

FUNDAMENTAL_DIMS = (2, 2)


def rel01_residuals(a, b, c, d) -> Dict[str, object]:
    """The defining relations of L_{0,1} on candidate images; all vanish for a true image."""
    h = 1 - q_power(-2)
    return {
        "ad = da": a * d - d * a,
        "ab - ba = -(1 - q^-2) bd": a * b - b * a + b * d * h,
        "db = q^2 bd": d * b - b * d * q_power(2),
        "cb - bc = (1 - q^-2)(da - d^2)": c * b - b * c - (d * a - d * d) * h,
        "cd = q^2 dc": c * d - d * c * q_power(2),
        "ac - ca = (1 - q^-2) dc": a * c - c * a - d * c * h,
        "ad - q^2 bc = 1": a * d - b * c * q_power(2) - 1,
    }


def _site_generators(n: int, site: int):
    matrix = gen_matrix(n, site)
    return tuple(matrix.entry(name) for name in GENERATOR_NAMES)


def _leg(n: int, site: int, leg: int) -> AlgebraMatrix:
    return embed_legs(gen_matrix(n, site).matrix, (leg,), FUNDAMENTAL_DIMS)


# ----------------------------------------------------------------------
# residuals
# ----------------------------------------------------------------------
def reflection_residual(n: int, site: int) -> AlgebraMatrix:
    """R M_1 R' M_2 - M_2 R M_1 R' for the site matrix, R' = R_21."""
    r = r_matrix(2, 2)
    r21 = r_matrix_21(2, 2)
    m1, m2 = _leg(n, site, 0), _leg(n, site, 1)
    return r @ m1 @ r21 @ m2 - m2 @ r @ m1 @ r21


def exchange_residual(n: int, first: int, second: int) -> AlgebraMatrix:
    """R M_1^{(a)} R^{-1} M_2^{(b)} - M_2^{(b)} R M_1^{(a)} R^{-1} for a < b."""
    if not first < second:
        raise ValueError(f"Exchange relation needs a < b, got {first}, {second}")
    r = r_matrix(2, 2)
    r_inv = r_matrix_inverse(2, 2)
    m1, m2 = _leg(n, first, 0), _leg(n, second, 1)
    return r @ m1 @ r_inv @ m2 - m2 @ r @ m1 @ r_inv


def fusion_residual(n: int, site: int) -> AlgebraMatrix:
    """M^{V2 (x) V2} - M_1 R_21 M_2 R_21^{-1} at one site."""
    r21 = r_matrix_21(2, 2)
    m1, m2 = _leg(n, site, 0), _leg(n, site, 1)
    return fused_site_matrix(n, site) - m1 @ r21 @ m2 @ r21.inverse()


def explicit_pair_residual() -> TensorElement:
    """d^{(2)} a^{(1)} - a^{(1)} d^{(2)} - (1 - q^{-2}) c^{(1)} b^{(2)} in L_{0,2}."""
    a1, _, c1, _ = _site_generators(2, 1)
    _, b2, _, d2 = _site_generators(2, 2)
    return d2 * a1 - a1 * d2 - c1 * b2 * (1 - q_power(-2))


def product_residuals(n: int, first: int) -> Dict[str, TensorElement]:
    """(M^{(first)} ... M^{(n)})_{ij} - 1^{(x) first-1} (x) Delta^{(n-first)}(Phi_1(M_{ij}))."""
    product_matrix = site_product(n, first)
    residuals = {}
    for (i, j), name in zip(product((0, 1), repeat=2), GENERATOR_NAMES):
        image = coproduct_image(n - first + 1, phi1_matrix()[i, j]).canonical
        if first > 1:
            image = TensorElement.tensor(TensorElement.identity(first - 1), image)
        residuals[name] = product_matrix[i][j].canonical - image
    return residuals


def support_witness(n: int, site: int):
    """Entries of the site matrix only involve slots site..n."""
    for name in GENERATOR_NAMES:
        support = gen_matrix(n, site).entry(name).support()
        if support and min(support) < site:
            return f"{name}{site} involves slot {min(support)}"
    return None


def conjugation_agreement_residual(n: int) -> AlgebraMatrix:
    """Closed 2x2 conjugation formula against the leg-wise conjugation, on site 1 of L_{0,n-1}."""
    current = gen_matrix(n - 1, 1).matrix
    return conjugate_new_leg(current) - conjugate_leg(extend_matrix(current), 0)


# ----------------------------------------------------------------------
# injectivity and surjectivity
# ----------------------------------------------------------------------
def injectivity_basis(max_degree: int) -> List[PbwElement]:
    """Phi_1 images of a^al b^be c^ga (al >= 1) and d^de b^be c^ga, total degree <= max_degree."""
    a, b, c, d = phi1_generators()
    basis = []
    for total in range(max_degree + 1):
        for first, beta in product(range(total + 1), repeat=2):
            gamma = total - first - beta
            if gamma < 0:
                continue
            tail = b ** beta * c ** gamma
            if first >= 1:
                basis.append(a ** first * tail)
            basis.append(d ** first * tail)
    return basis


def injectivity_witness(max_degree: int):
    basis = injectivity_basis(max_degree)
    logger.debug(f"Checking independence of {len(basis)} monomials of degree <= {max_degree}")
    truncation = app_config.bounds.verma_truncation
    if linearly_independent(basis, truncation):
        return None
    return f"the {len(basis)} monomials of degree <= {max_degree} are linearly dependent"


def surjectivity_residuals(n: int, site: int) -> Dict[str, TensorElement]:
    """Slot generators recovered from loop generators and delta^{(k)+-1}, minus their targets."""
    recovered = local_slot_generators(n, site)
    expected = expected_slot_images(n, site)
    residuals = {name: recovered[name].canonical - expected[name] for name in expected}
    local = local_site_generators(n, site)
    for name, image in phi1_local_images(n, site).items():
        residuals[f"{name} at slot {site}"] = local[name].canonical - image
    return residuals


# ----------------------------------------------------------------------
# suites
# ----------------------------------------------------------------------
def _check(identity_id: str, citation: str, evaluate, **inputs) -> IdentityCheck:
    return IdentityCheck(identity_id, citation, inputs, evaluate)


def presentation_checks(n: int) -> List[IdentityCheck]:
    checks = []
    for site in range(1, n + 1):
        checks.append(_check(
            f"presentation.rel01.n{n}.site{site}",
            "single-site relations of the generators a, b, c, d and ad - q^2 bc = 1",
            lambda site=site: witness_of(rel01_residuals(*_site_generators(n, site))),
            n=n, site=site))
        checks.append(_check(
            f"presentation.reflection.n{n}.site{site}",
            "reflection equation R M1 R' M2 = M2 R M1 R' on V2 (x) V2",
            lambda site=site: witness_of(reflection_residual(n, site)),
            n=n, site=site))
        checks.append(_check(
            f"presentation.fusion.n{n}.site{site}",
            "fusion relation M(V2 (x) V2) = M1 R' M2 R'^-1",
            lambda site=site: witness_of(fusion_residual(n, site)),
            n=n, site=site))
    for first in range(1, n + 1):
        for second in range(first + 1, n + 1):
            checks.append(_check(
                f"presentation.exchange.n{n}.sites{first}{second}",
                "exchange relation R M1(a) R^-1 M2(b) = M2(b) R M1(a) R^-1 for a < b",
                lambda first=first, second=second: witness_of(exchange_residual(n, first, second)),
                n=n, first=first, second=second))
    if n == 2:
        checks.append(_check(
            "presentation.explicit.n2",
            "d2 a1 = a1 d2 + (1 - q^-2) c1 b2",
            lambda: witness_of(explicit_pair_residual()),
            n=n))
    return checks


def alekseev_checks(n: int, max_degree: int = None) -> List[IdentityCheck]:
    max_degree = app_config.bounds.max_degree if max_degree is None else max_degree
    checks = [
        _check("alekseev.phi1.omega", "q a + q^-1 d = Omega",
               lambda: equality_witness(omega(1, 1).canonical.slot_element(), casimir())),
        _check(f"alekseev.conjugation.n{n}",
               "closed conjugation formula agrees with conjugation by R_0k",
               lambda: witness_of(conjugation_agreement_residual(max(n, 2))), n=n),
        _check(f"alekseev.injectivity.degree{max_degree}",
               "Phi_1 images of the PBW-type monomials are linearly independent",
               lambda: injectivity_witness(max_degree), max_degree=max_degree),
    ]
    if n >= 2:
        checks.append(_check(
            "alekseev.site_matrix.n2.c1",
            "Phi_2(c1) = (q - q^-1) K^-1 E (x) K^-1",
            lambda: equality_witness(
                gen_matrix(2, 1).entry("c"),
                TensorElement.tensor(phi1_generators()[2], phi1_generators()[3])),
            n=2))
    for site in range(1, n + 1):
        checks.append(_check(
            f"alekseev.support.n{n}.site{site}",
            "site matrix entries only involve slots site..n",
            lambda site=site: support_witness(n, site), n=n, site=site))
        checks.append(_check(
            f"alekseev.coproduct.n{n}.from{site}",
            "M(i) ... M(n) = 1 (x) ... (x) Delta^(n-i) of the single-site matrix",
            lambda site=site: witness_of(product_residuals(n, site)), n=n, site=site))
        checks.append(_check(
            f"alekseev.surjectivity.n{n}.site{site}",
            "K, E, F at each slot are reached from the generators and delta^+-1",
            lambda site=site: witness_of(surjectivity_residuals(n, site)), n=n, site=site))
    return checks


def _xi_witness(n: int):
    for i in range(1, n + 1):
        expected = TensorElement.identity(n)
        for slot in range(i, n + 1):
            expected = expected * TensorElement.embed(phi1_generators()[3], slot, n)
        text = equality_witness(xi(n, i).canonical, expected)
        if text is not None:
            return f"xi{i}: {text}"
        _, delta, _ = xi_delta(n, i)
        text = equality_witness(xi(n, i).canonical, (delta * xi(n, i + 1)).canonical)
        if text is not None:
            return f"delta{i}: {text}"
    for i, j in product(range(1, n + 1), repeat=2):
        if i < j:
            text = witness_of(commutator(xi(n, i).canonical, xi(n, j).canonical))
            if text is not None:
                return f"[xi{i}, xi{j}]: {text}"
    return None


def _eta_witness(n: int):
    element = eta(n)
    if n == 1:
        return witness_of(centrality_residuals(element, n))
    partners = {f"omega{i}": omega(n, i) for i in range(1, n + 1)}
    for first in range(1, n + 1):
        for second in range(first + 1, n + 1):
            partners[f"qTr(M{first}..M{second})"] = loop_quantum_trace(site_product(n, first, second))
    text = witness_of(invariance_residuals(element, n))
    if text is not None:
        return f"invariance: {text}"
    for name, partner in partners.items():
        text = witness_of(commutator(element.canonical, partner.canonical))
        if text is not None:
            return f"[eta, {name}]: {text}"
    return None


def center_checks(n: int) -> List[IdentityCheck]:
    checks = []
    for i in range(1, n + 1):
        checks.append(_check(
            f"center.omega.n{n}.site{i}",
            "omega(i) = q a(i) + q^-1 d(i) commutes with every generator",
            lambda i=i: witness_of(centrality_residuals(omega(n, i), n)), n=n, site=i))
    checks.append(_check(
        f"center.eta.n{n}",
        "eta = qTr(M(1) ... M(n)) is invariant and commutes with the invariant elements",
        lambda: _eta_witness(n), n=n))
    checks.append(_check(
        f"center.xi.n{n}",
        "Phi_n(xi(i)) = K^-1 at slots i..n and the xi(i) commute",
        lambda: _xi_witness(n), n=n))
    if n == 1:
        checks.append(_check(
            "center.invariant.n1.identity",
            "qTr of the fundamental site matrix is omega",
            lambda: equality_witness(invariant_element(1, (2,)), omega(1, 1)), n=1))
    if n == 2:
        checks.append(_check(
            "center.invariant.n2.identity",
            "qTr(M1(1) R^-1 M2(2) R) commutes with the diagonal generators",
            lambda: witness_of(invariance_residuals(invariant_element(2, (2, 2)), 2)), n=2))
        checks.append(_check(
            "center.invariant.n2.projector",
            "qTr(U M1(1) R^-1 M2(2) R) with the Temperley-Lieb projector U is invariant",
            lambda: witness_of(invariance_residuals(
                invariant_element(2, (2, 2), temperley_lieb_projector()), 2)), n=2))
    return checks


def verify_presentation(n: int, jobs: int = 1):
    """Run the presentation suite for L_{0,n} and return its Report."""
    from harness.runner import run_checks
    logger.info(f"Verifying the presentation of L_0,{n}")
    return run_checks(presentation_checks(n), "presentation", jobs, {"n": n})
