"""
Identity checks for the quantum coadjoint action: derivation values on the
generators, Leibniz and lift independence, the sl2 triple and its diagonal
version, exponential series against closed forms, invariance of Omega and of
threaded traces, and the intertwining with the braid automorphisms.
"""

import random
from fractions import Fraction
from typing import Dict, List, Mapping

from common.config import config as app_config
from common.logging_utils import get_logger
from scalar import Q_DIFF
from uqsl2 import (
    E, F, K, K_INV, PbwElement, TensorElement, braid, braid_images, coproduct_iterated, q_bracket_k,
    tau, tau_images,
)
from graphalg import loop_generators, omega
from harness.report import IdentityCheck, witness_of
from rootcenter import EpsTensorElement, slot_coordinates, specialize_element, threaded_trace
from qca.configs.qca_config import config
from qca.derivations import (
    GENERATORS, derivation, extension_residual, leibniz_residual,
    lift_independence_residuals, script_triple, triple_defect,
)
from qca.lifts import CentralLift, central_lift, site_coordinate_residuals
from qca.series import SERIES_TARGETS, series_residual

logger = get_logger("qca")

_PBW = {"E": E, "F": F, "K": K, "K_INV": K_INV}


def _at_eps(element, l: int) -> EpsTensorElement:
    return specialize_element(element, l)


def derivation_value_residuals(l: int) -> Dict[str, EpsTensorElement]:
    """D_z, D_e, D_y on K, E, F minus their closed values."""
    inverse_l = Fraction(1, l)
    c_power = _at_eps(PbwElement.scalar(Q_DIFF ** (l - 1)), l)
    z, e, y = (central_lift(name, l).at_eps() for name in ("z", "e", "y"))
    expected = {
        ("z", "K"): z * 0,
        ("z", "E"): z * _at_eps(E, l) * -inverse_l,
        ("z", "F"): z * _at_eps(F, l) * inverse_l,
        ("e", "K"): e * _at_eps(K, l) * inverse_l,
        ("e", "E"): e * 0,
        ("e", "F"): c_power * _at_eps(q_bracket_k(1) * E ** (l - 1), l) * -inverse_l,
        ("y", "K"): y * _at_eps(K, l) * -inverse_l,
        ("y", "F"): y * 0,
        ("y", "E"): c_power * _at_eps(q_bracket_k(-1) * F ** (l - 1), l) * inverse_l,
    }
    return {f"D_{a}({u})": derivation(central_lift(a, l), _PBW[u], l) - value
            for (a, u), value in expected.items()}


# ----------------------------------------------------------------------
# random samples
# ----------------------------------------------------------------------
def random_pbw(rng: random.Random, degree: int, terms: int = 2) -> PbwElement:
    """A small PBW element with integer coefficients and monomials of degree <= degree."""
    element = PbwElement()
    for _ in range(terms):
        f_exp = rng.randint(0, degree)
        e_exp = rng.randint(0, degree - f_exp)
        k_exp = rng.randint(-(degree - f_exp - e_exp), degree - f_exp - e_exp)
        element = element + PbwElement.monomial(f_exp, k_exp, e_exp, rng.choice((-2, -1, 1, 2, 3)))
    return element


def junk_elements(count: int = None, degree: int = None, seed: int = None) -> List[PbwElement]:
    rng = random.Random(app_config.runtime.seed if seed is None else seed)
    count = config.junk_samples if count is None else count
    degree = config.junk_degree if degree is None else degree
    return [random_pbw(rng, degree) for _ in range(count)]


def leibniz_residuals(l: int, samples: int = None, seed: int = None) -> Dict[str, EpsTensorElement]:
    """D_a(uw) - D_a(u) w - u D_a(w) for a in x, y, z on random pairs."""
    rng = random.Random(app_config.runtime.seed if seed is None else seed)
    samples = config.junk_samples if samples is None else samples
    residuals = {}
    for index in range(samples):
        u, w = random_pbw(rng, 2), random_pbw(rng, 2)
        for name in ("x", "y", "z"):
            residuals[f"{name}: pair {index}"] = leibniz_residual(central_lift(name, l), u, w, l)
    return residuals


def extension_residuals(l: int, samples: int = None, seed: int = None) -> Dict[str, EpsTensorElement]:
    """Commutator formula against the Leibniz extension from the generator table."""
    rng = random.Random((app_config.runtime.seed if seed is None else seed) + 1)
    samples = config.junk_samples if samples is None else samples
    residuals = {}
    for index in range(samples):
        u = random_pbw(rng, 3)
        for name in ("x", "y", "z", "e", "f"):
            residuals[f"{name}: sample {index}"] = extension_residual(central_lift(name, l), u, l)
    return residuals


def lift_independence_check(a, u, l: int, junk=None, jobs: int = 1):
    """Run the lift-independence identity for one pair (a, u) with the given or sampled junk."""
    from harness.runner import run_checks
    junk = junk_elements() if junk is None else list(junk)
    check = IdentityCheck(
        f"qca.lift_independence.l{l}.{a}",
        "D_a(u) does not depend on the lift of u",
        {"a": str(a), "u": str(u), "l": l, "junk": [str(j) for j in junk]},
        lambda: witness_of(lift_independence_residuals(a, u, l, junk)))
    return run_checks([check], "qca", jobs, {"l": l})


def lift_independence_residuals_all(l: int) -> Dict[str, EpsTensorElement]:
    """The three fixed pairs with their junk, then every canonical lift against sampled junk."""
    residuals = {}
    fixed = (("z", E, F), ("e", F, K * E), ("y", K, PbwElement.scalar(1)))
    for name, u, junk in fixed:
        for key, value in lift_independence_residuals(central_lift(name, l), u, l, [junk]).items():
            residuals[f"{name}, {u}: {key}"] = value
    for name in ("x", "y", "z", "e", "f"):
        for generator in GENERATORS:
            for key, value in lift_independence_residuals(
                    central_lift(name, l), _PBW[generator], l, junk_elements()).items():
                residuals[f"{name}, {generator}: {key}"] = value
    return residuals


# ----------------------------------------------------------------------
# the triple
# ----------------------------------------------------------------------
def _relations_on(triple, defect, image) -> Dict[str, EpsTensorElement]:
    script_e, script_f, script_h = triple["E"], triple["F"], triple["H"]
    e_image, f_image, h_image = script_e(image), script_f(image), script_h(image)
    return {
        "[H,E] = 2E": script_h(e_image) - script_e(h_image) - e_image * 2,
        "[H,F] = -2F": script_h(f_image) - script_f(h_image) + f_image * 2,
        "[E,F] = H + ad": script_e(f_image) - script_f(e_image) - h_image - defect(image),
    }


def central_images(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """x, y, z^{+-1} of every slot and the images of omega^{(i)}; ad(J) vanishes on all of them."""
    images = dict(slot_coordinates(n, l))
    for site in range(1, n + 1):
        images[f"omega{site}"] = _at_eps(omega(n, site).canonical, l)
    return images


def triple_residuals(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """
    [H,E] - 2E and [H,F] + 2F on the slot generators; [E,F] - H - triple_defect
    on the slot generators; [E,F] - H on central elements and on Delta(K^{+-1}).
    """
    triple = script_triple(n, l)
    script_e, script_f, script_h = triple["E"], triple["F"], triple["H"]
    defect = triple_defect(n, l)
    residuals = {}
    relations = {
        "[H,E] = 2E": script_h.bracket(script_e).residuals(script_e * 2),
        "[H,F] = -2F": script_h.bracket(script_f).residuals(script_f * -2),
        "[E,F] = H + ad": script_e.bracket(script_f).residuals(script_h + defect),
    }
    for relation, values in relations.items():
        for generator, value in values.items():
            residuals[f"{relation} on {generator}"] = value
    images = central_images(n, l)
    for name, generator in (("K", K), ("K_INV", K_INV)):
        images[name if n == 1 else f"Delta({name})"] = _at_eps(coproduct_iterated(generator, n), l)
    for name, image in images.items():
        residuals[f"[E,F] = H on {name}"] = script_e(script_f(image)) - script_f(script_e(image)) - script_h(image)
    return residuals


def loop_triple_residuals(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """The triple relations, with the inner correction to [E,F], on the images of the 4n loop generators."""
    triple = script_triple(n, l)
    defect = triple_defect(n, l)
    residuals = {}
    for name, generator in loop_generators(n).items():
        image = _at_eps(generator.canonical, l)
        for relation, value in _relations_on(triple, defect, image).items():
            residuals[f"{relation} on {name}"] = value
    return residuals


def well_defined_residuals(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """The triple respects the defining relations of every slot."""
    residuals = {}
    for key, value in script_triple(n, l).items():
        for relation, residual in value.relation_residuals().items():
            residuals[f"{key}: {relation}"] = residual
    return residuals


# ----------------------------------------------------------------------
# invariance
# ----------------------------------------------------------------------
def consecutive_tuples(n: int) -> List[tuple]:
    return [tuple(range(first, last + 1)) for first in range(1, n + 1) for last in range(first, n + 1)]


def invariance_residuals(n: int, l: int) -> Dict[str, EpsTensorElement]:
    """
    E, F (diagonal for n >= 2) annihilate omega^{(i)} and the threaded traces
    T_l(qTr(M^{(i)} ... M^{(j)})) of consecutive tuples; H annihilates omega^{(i)}.
    """
    triple = script_triple(n, l)
    residuals = {}
    for site in range(1, n + 1):
        image = _at_eps(omega(n, site).canonical, l)
        for key in ("E", "F", "H"):
            residuals[f"{key}(omega{site})"] = triple[key](image)
    if n == 1:
        coordinates = slot_coordinates(1, l)
        x, y, z = coordinates["x1"], coordinates["y1"], coordinates["z1"]
        residuals["E(x)"] = triple["E"](x)
        residuals["F(y)"] = triple["F"](y)
        residuals["E(z) = z^2 x"] = triple["E"](z) - z * z * x
        residuals["F(z) = z^2 y"] = triple["F"](z) - z * z * y
        return residuals
    for sites in consecutive_tuples(n):
        trace = threaded_trace(n, l, sites)
        label = "".join(map(str, sites))
        for key in ("E", "F"):
            residuals[f"{key}(T_l(qTr M{label}))"] = triple[key](trace)
    return residuals


# ----------------------------------------------------------------------
# braid automorphisms
# ----------------------------------------------------------------------
def eps_algebra_map(element: EpsTensorElement, images: Mapping[str, EpsTensorElement]) -> EpsTensorElement:
    """Apply the algebra map with the given generator images to an element of U_eps."""
    total = images["K"] * 0
    for (monomial,), coefficient in element.terms.items():
        k_part = images["K"] ** monomial.k_exp if monomial.k_exp >= 0 else images["K_INV"] ** -monomial.k_exp
        total = total + images["F"] ** monomial.f_exp * k_part * images["E"] ** monomial.e_exp * coefficient
    return total


AUTOMORPHISMS = {
    "T_1": (lambda u: braid(u, 1), braid_images(1)),
    "tau_1": (lambda u: tau(u, 1), tau_images(1)),
}


def braid_intertwining_residuals(l: int) -> Dict[str, EpsTensorElement]:
    """T_1(x) = y, T_1(y) = z^2 x and D_{T(a)} T = T D_a on generators for T in T_1, tau_1."""
    coordinates = slot_coordinates(1, l)
    x, y, z = coordinates["x1"], coordinates["y1"], coordinates["z1"]
    lifts = {name: central_lift(name, l) for name in ("x", "y", "z")}
    braid_map = AUTOMORPHISMS["T_1"][0]
    residuals = {
        "T_1(x) = y": _at_eps(braid_map(lifts["x"].lift.slot_element()), l) - y,
        "T_1(y) = z^2 x": _at_eps(braid_map(lifts["y"].lift.slot_element()), l) - z * z * x,
    }
    for label, (apply, images) in AUTOMORPHISMS.items():
        eps_images = {key: _at_eps(value, l) for key, value in images.items()}
        for name, lift in lifts.items():
            moved = CentralLift(f"{label}({name})", TensorElement.embed(apply(lift.lift.slot_element()), 1, 1), l)
            for generator in GENERATORS:
                u = _PBW[generator]
                left = derivation(moved, apply(u), l)
                right = eps_algebra_map(derivation(lift, u, l), eps_images)
                residuals[f"D_{label}({name}) {label} = {label} D_{name} on {generator}"] = left - right
    return residuals


# ----------------------------------------------------------------------
# suites
# ----------------------------------------------------------------------
def _check(identity_id: str, citation: str, evaluate, **inputs) -> IdentityCheck:
    return IdentityCheck(identity_id, citation, inputs, evaluate)


def sl2_triple_checks(n: int, l: int) -> List[IdentityCheck]:
    checks = [
        _check(f"qca.sl2_triple.n{n}.l{l}",
               "[H,E] = 2E, [H,F] = -2F; [E,F] = H on the center and up to ad(J) on E, F",
               lambda: witness_of(triple_residuals(n, l)), n=n, l=l),
        _check(f"qca.well_defined.n{n}.l{l}", "E, F, H respect the defining relations",
               lambda: witness_of(well_defined_residuals(n, l)), n=n, l=l),
    ]
    if 2 <= n <= config.diagonal_max_n:
        checks.append(_check(
            f"qca.sl2_triple.loops.n{n}.l{l}", "the diagonal triple relations on the loop generators of L_0,n",
            lambda: witness_of(loop_triple_residuals(n, l)), n=n, l=l))
        checks.append(_check(
            f"qca.site_coordinates.n{n}.l{l}", "x_hat(i) = -c(i)^l prod_{k>i} delta(k)^-l maps to x(i)",
            lambda: witness_of(site_coordinate_residuals(n, l)), n=n, l=l))
    return checks


def invariance_checks(n: int, l: int) -> List[IdentityCheck]:
    return [_check(f"qca.invariance.n{n}.l{l}",
                   "E and F annihilate omega(i) and T_l of consecutive quantum traces",
                   lambda: witness_of(invariance_residuals(n, l)), n=n, l=l)]


def series_checks(l: int, order: int) -> List[IdentityCheck]:
    checks = []
    for direction, names in SERIES_TARGETS.items():
        for name in names:
            checks.append(_check(
                f"qca.series.{direction}.{name.replace(' ', '')}.l{l}",
                f"exp(t{direction})({name}) matches its closed form to order {order}",
                lambda direction=direction, name=name: witness_of(series_residual(direction, name, l, order)),
                l=l, order=order))
    return checks


def qca_checks(n: int, l: int, series_order: int = None) -> List[IdentityCheck]:
    order = config.series_order if series_order is None else series_order
    checks = [
        _check(f"qca.derivation_values.l{l}", "D_z, D_e, D_y on K, E, F",
               lambda: witness_of(derivation_value_residuals(l)), l=l),
        _check(f"qca.leibniz.l{l}", "D_a(uw) = D_a(u) w + u D_a(w)",
               lambda: witness_of(leibniz_residuals(l)), l=l, seed=app_config.runtime.seed),
        _check(f"qca.extension.l{l}", "the commutator formula agrees with the Leibniz extension",
               lambda: witness_of(extension_residuals(l)), l=l, seed=app_config.runtime.seed),
        _check(f"qca.lift_independence.l{l}", "D_a(u) does not depend on the lift of u",
               lambda: witness_of(lift_independence_residuals_all(l)), l=l, seed=app_config.runtime.seed),
        _check(f"qca.braid.l{l}", "D_T(a) T = T D_a for T_1 and tau_1",
               lambda: witness_of(braid_intertwining_residuals(l)), l=l),
    ]
    checks.extend(sl2_triple_checks(1, l))
    if n >= 2:
        checks.extend(sl2_triple_checks(n, l))
    checks.extend(series_checks(l, order))
    checks.extend(invariance_checks(1, l))
    if 2 <= n <= config.diagonal_max_n:
        checks.extend(invariance_checks(n, l))
    return checks


def sl2_triple_suite(n: int, l: int, jobs: int = 1):
    from harness.runner import run_checks
    return run_checks(sl2_triple_checks(n, l), "qca", jobs, {"n": n, "l": l})


def invariance_suite(n: int, l: int, jobs: int = 1):
    from harness.runner import run_checks
    return run_checks(invariance_checks(n, l), "qca", jobs, {"n": n, "l": l})


def qca_suite(n: int, l: int, series_order: int = None, jobs: int = 1):
    """Run every quantum coadjoint action check for L_0,n at a primitive l-th root of unity."""
    from harness.runner import run_checks
    logger.info(f"Checking the quantum coadjoint action for n={n}, l={l}")
    order = config.series_order if series_order is None else series_order
    return run_checks(qca_checks(n, l, order), "qca", jobs, {"n": n, "l": l, "series_order": order})
