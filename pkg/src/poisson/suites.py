"""
Identity checks for the classical side: the axioms of both bracket tables,
the bracket of the small center from the model and from the derivations,
classical invariance of trace functions, the group law, the dressing of the
Frobenius matrices, and Fr as a Poisson map.
"""

from typing import List

from common.config import config as app_config
from common.logging_utils import get_logger
from harness.report import IdentityCheck, witness_of
from poisson.brackets import (
    casimir_residuals, classical_invariance_residuals, fr_bracket, model_agreement_residuals,
    qca_bracket_from_derivations, qca_bracket_model,
)
from poisson.configs.poisson_config import config
from poisson.dressing import dressing_residuals, group_law_residuals
from poisson.morphism import fr_poisson_residual, frobenius_determinants, generator_pairs

logger = get_logger("poisson")

LOCALITY_PAIRS = (("z1", "x2"), ("z1", "y2"), ("y1", "x2"), ("x1", "x2"))


def _check(identity_id: str, citation: str, evaluate, **inputs) -> IdentityCheck:
    return IdentityCheck(identity_id, citation, inputs, evaluate)


def _table_axiom_checks(prefix: str, label: str, table_of, n: int) -> List[IdentityCheck]:
    return [
        _check(f"poisson.{prefix}.antisymmetry.n{n}", f"{label} is antisymmetric",
               lambda: witness_of(table_of(n).antisymmetry_residuals()), n=n),
        _check(f"poisson.{prefix}.jacobi.n{n}", f"{label} satisfies the Jacobi identity",
               lambda: witness_of(table_of(n).jacobi_residuals(
                   table_of(n).jacobi_triples(seed=app_config.runtime.seed))),
               n=n, sample=config.jacobi_sample, seed=app_config.runtime.seed),
    ]


def bracket_checks(n: int, l: int) -> List[IdentityCheck]:
    checks = []
    for size in range(1, min(n, 2) + 1):
        checks.extend(_table_axiom_checks("fr", "the Fock-Rosly bracket", fr_bracket, size))
        checks.extend(_table_axiom_checks("qca", "the bracket on Z_0", qca_bracket_model, size))
    checks.append(_check(
        f"poisson.qca.casimir.n{n}", "-xyz + z + z^-1 Poisson-commutes with every coordinate",
        lambda: witness_of(casimir_residuals(n)), n=n))
    checks.append(_check(
        f"poisson.qca.model.l{l}", "{a, b} = D_a(b) reproduces {y,x} = -1 + xy + z^-2, {z,x} = -zx, {z,y} = yz",
        lambda: witness_of(model_agreement_residuals(1, l)), l=l))
    if n >= 2:
        checks.append(_check(
            f"poisson.qca.locality.l{l}", "coordinates of different sites Poisson-commute",
            lambda: witness_of({f"{{{u},{v}}}": qca_bracket_from_derivations((u, v), l, 2)
                                for u, v in LOCALITY_PAIRS}),
            l=l, pairs=[list(pair) for pair in LOCALITY_PAIRS]))
    checks.append(_check(
        f"poisson.classical_invariance.n{n}", "conjugation fields annihilate Tr(L(i) ... L(j))",
        lambda: witness_of(classical_invariance_residuals(n)), n=n))
    return checks


def group_law_checks() -> List[IdentityCheck]:
    return [_check("poisson.group_law",
                   "psi turns the product of G* into x = x1 + z1^-1 x2, y = y1 + y2 z1^-1, z = z1 z2; "
                   "M_+ M_-^-1 = [[z - zxy, y], [-x, z^-1]]",
                   lambda: witness_of(group_law_residuals()))]


def dressing_checks(n: int, l: int) -> List[IdentityCheck]:
    checks = []
    for site in range(1, n + 1):
        checks.append(_check(
            f"poisson.dressing.n{n}.l{l}.site{site}",
            "Phi_n (Phi_1^(x)n)^-1 sends M(i) to R(i) M(i) R(i)^-1, with zp cancelling",
            lambda site=site: witness_of(dressing_residuals(n, l, site)), n=n, l=l, site=site))
    return checks


def fr_is_poisson_checks(n: int, l: int, pairs=None) -> List[IdentityCheck]:
    pairs = generator_pairs(n) if pairs is None else pairs
    checks = [_check(f"poisson.fr_is_poisson.n{n}.l{l}.det", "det Fr(L(i)) = 1",
                     lambda: witness_of(frobenius_determinants(n, l)), n=n, l=l)]
    for f, g in pairs:
        checks.append(_check(
            f"poisson.fr_is_poisson.n{n}.l{l}.{f}.{g}", "{Fr f, Fr g}_QCA = Fr {f, g}_FR",
            lambda f=f, g=g: witness_of(fr_poisson_residual(f, g, n, l)),
            n=n, l=l, f=f, g=g))
    return checks


def fr_is_poisson(n: int, l: int, jobs: int = 1):
    """Compare both sides of the Poisson property of Fr on generator pairs."""
    from harness.runner import run_checks
    logger.info(f"Checking that Fr is a Poisson map for n={n}, l={l}")
    return run_checks(fr_is_poisson_checks(n, l), "poisson", jobs,
                      {"n": n, "l": l, "seed": app_config.runtime.seed})


def dressing_identity(n: int, l: int, jobs: int = 1):
    from harness.runner import run_checks
    return run_checks(dressing_checks(n, l), "dressing", jobs, {"n": n, "l": l})


def group_law_and_psi(jobs: int = 1):
    from harness.runner import run_checks
    return run_checks(group_law_checks(), "poisson", jobs)


def poisson_checks(n: int, l: int) -> List[IdentityCheck]:
    checks = bracket_checks(n, l) + group_law_checks()
    for size in range(1, min(n, 2) + 1):
        checks.extend(fr_is_poisson_checks(size, l))
    return checks


def poisson_suite(n: int, l: int, jobs: int = 1):
    """Run the bracket, group law and Fr-is-Poisson checks."""
    from harness.runner import run_checks
    logger.info(f"Checking the Poisson structures for n={n}, l={l}")
    return run_checks(poisson_checks(n, l), "poisson", jobs,
                      {"n": n, "l": l, "seed": app_config.runtime.seed})


def dressing_suite_checks(n: int, l: int) -> List[IdentityCheck]:
    checks = []
    for size in range(2, max(2, min(n, config.dressing_max_n)) + 1):
        checks.extend(dressing_checks(size, l))
    return checks


def dressing_suite(n: int, l: int, jobs: int = 1):
    from harness.runner import run_checks
    logger.info(f"Checking the dressing identity up to n={max(2, min(n, config.dressing_max_n))}, l={l}")
    return run_checks(dressing_suite_checks(n, l), "dressing", jobs, {"n": n, "l": l})
