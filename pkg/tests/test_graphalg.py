import pytest

from scalar import ONE, Q, Q_DIFF, ZERO, q_power
from uqsl2 import F, K_INV, UNIT, TensorElement, casimir, commutator, coproduct
from repv import AlgebraMatrix
from harness.report import Status, witness_of
from harness.runner import run_checks
from graphalg import (
    LoopElement, NotAnIntertwiner, alekseev_checks, center_checks, check_intertwiner,
    conjugate_leg, conjugate_new_leg, eta, exchange_residual, explicit_pair_residual,
    extend_matrix, fusion_residual, gen_matrix, injectivity_basis, invariance_residuals,
    invariant_element, loop_generators, omega, phi1_generators, phi1_matrix, presentation_checks,
    product_residuals, reflection_residual, rel01_residuals, site_product,
    surjectivity_residuals, temperley_lieb_projector, verify_presentation, xi, xi_delta,
)
from graphalg.invariants import centrality_residuals
from graphalg.presentation import conjugation_agreement_residual, injectivity_witness


def all_zero(residuals):
    return witness_of(residuals) is None


class TestSingleSite:
    def test_quantum_trace_is_casimir(self):
        a, _, _, d = phi1_generators()
        assert a * Q + d * q_power(-1) == casimir()
        assert omega(1, 1).canonical.slot_element() == casimir()

    def test_relations_of_phi1(self):
        assert all_zero(rel01_residuals(*phi1_generators()))

    def test_quantum_determinant(self):
        a, b, c, d = phi1_generators()
        assert a * d - b * c * q_power(2) == 1

    def test_relations_fail_on_wrong_images(self):
        a, b, c, d = phi1_generators()
        assert not all_zero(rel01_residuals(a, c, b, d))


class TestSiteMatrices:
    def test_last_site_is_unconjugated(self):
        a, b, c, d = phi1_generators()
        matrix = gen_matrix(2, 2)
        for name, image in zip("abcd", (a, b, c, d)):
            assert matrix.entry(name) == TensorElement.embed(image, 2, 2)

    def test_first_site_of_two(self):
        _, _, c, d = phi1_generators()
        matrix = gen_matrix(2, 1)
        assert matrix.entry("c") == TensorElement.tensor(c, K_INV)
        expected_d = TensorElement.tensor(d, UNIT) - TensorElement.tensor(c, F) * (Q * Q_DIFF)
        assert matrix.entry("d") == expected_d

    def test_site_out_of_range(self):
        with pytest.raises(ValueError):
            gen_matrix(2, 3)

    def test_closed_formula_matches_legwise_conjugation(self):
        assert conjugation_agreement_residual(2).is_zero()

    def test_legwise_conjugation_on_phi1(self):
        embedded = phi1_matrix().map(lambda u: TensorElement.embed(u, 1, 1), TensorElement(1))
        assert conjugate_new_leg(embedded) == conjugate_leg(extend_matrix(embedded), 0)

    def test_entries_avoid_earlier_slots(self):
        for name in "abcd":
            assert 1 not in gen_matrix(2, 2).entry(name).support()


class TestPresentation:
    @pytest.mark.parametrize("n,site", [(1, 1), (2, 1), (2, 2)])
    def test_reflection_equation(self, n, site):
        assert reflection_residual(n, site).is_zero()

    def test_exchange_relation(self):
        assert exchange_residual(2, 1, 2).is_zero()

    def test_exchange_needs_ordered_sites(self):
        with pytest.raises(ValueError):
            exchange_residual(2, 2, 1)

    @pytest.mark.parametrize("n,site", [(1, 1), (2, 1)])
    def test_fusion_relation(self, n, site):
        assert fusion_residual(n, site).is_zero()

    def test_explicit_pair_relation(self):
        assert not explicit_pair_residual()

    @pytest.mark.parametrize("n,site", [(2, 1), (2, 2)])
    def test_relations_at_every_site(self, n, site):
        generators = loop_generators(n)
        a, b, c, d = (generators[f"{name}{site}"] for name in "abcd")
        assert all_zero(rel01_residuals(a, b, c, d))

    @pytest.mark.parametrize("first", [1, 2])
    def test_products_are_coproducts(self, first):
        assert all_zero(product_residuals(2, first))

    @pytest.mark.slow
    def test_three_sites(self):
        report = verify_presentation(3, jobs=2)
        assert report.passed, report.failures()

    def test_suite_ids(self):
        ids = {check.identity_id for check in presentation_checks(2)}
        assert "presentation.exchange.n2.sites12" in ids
        assert "presentation.explicit.n2" in ids
        assert "presentation.reflection.n2.site2" in ids

    def test_suite_passes_for_one_site(self):
        report = verify_presentation(1)
        assert report.passed
        assert report.summary["total"] == 3


class TestLoopElements:
    def test_word_is_tracked(self):
        generators = loop_generators(1)
        element = (generators["a1"] + generators["b1"]) * generators["c1"]
        assert element.word == "(a1 + b1) * c1"

    def test_equality_uses_the_image(self):
        generators = loop_generators(1)
        a, b, c, d = (generators[name] for name in ("a1", "b1", "c1", "d1"))
        determinant = a * d - b * c * q_power(2)
        assert determinant == LoopElement.scalar(1, 1)
        assert determinant.word != "1"

    def test_scalar_arithmetic(self):
        d = loop_generators(1)["d1"]
        assert (d + 1) - 1 == d
        assert (2 * d).canonical == d.canonical * 2

    def test_product_of_sites(self):
        generators = loop_generators(2)
        product = site_product(2, 1)
        assert product[1][1] == generators["c1"] * generators["b2"] + generators["d1"] * generators["d2"]


class TestLocalization:
    def test_xi_images(self):
        expected = TensorElement.embed(K_INV, 1, 2) * TensorElement.embed(K_INV, 2, 2)
        assert xi(2, 1).canonical == expected
        assert xi(2, 2).canonical == TensorElement.embed(K_INV, 2, 2)
        assert xi(2, 3).canonical == TensorElement.identity(2)

    def test_delta_relates_consecutive_xi(self):
        _, delta, delta_inv = xi_delta(2, 1)
        assert delta * xi(2, 2) == xi(2, 1)
        assert (delta * delta_inv).canonical == TensorElement.identity(2)

    def test_xi_commute(self):
        assert not commutator(xi(2, 1).canonical, xi(2, 2).canonical)

    @pytest.mark.parametrize("site", [1, 2])
    def test_surjectivity(self, site):
        assert all_zero(surjectivity_residuals(2, site))

    def test_injectivity_basis_size(self):
        assert len(injectivity_basis(0)) == 1
        assert len(injectivity_basis(1)) == 5

    def test_injectivity_low_degree(self):
        assert injectivity_witness(2) is None

    @pytest.mark.slow
    def test_injectivity_degree_four(self):
        assert injectivity_witness(4) is None


class TestCenter:
    @pytest.mark.parametrize("site", [1, 2])
    def test_omega_is_central(self, site):
        assert all_zero(centrality_residuals(omega(2, site), 2))

    def test_eta_is_central_for_one_site(self):
        assert all_zero(centrality_residuals(eta(1), 1))

    def test_eta_is_invariant(self):
        assert all_zero(invariance_residuals(eta(2), 2))

    def test_eta_is_not_central_for_two_sites(self):
        assert commutator(eta(2).canonical, loop_generators(2)["d2"].canonical)

    def test_eta_is_iterated_coproduct_of_casimir(self):
        assert eta(2).canonical == coproduct(casimir())

    def test_invariant_of_one_site_is_omega(self):
        assert invariant_element(1, (2,)) == omega(1, 1)

    def test_trivial_color_drops_the_site(self):
        assert invariant_element(2, (2, 1)) == omega(2, 1)

    def test_invariant_elements_of_two_sites(self):
        assert all_zero(invariance_residuals(invariant_element(2, (2, 2)), 2))
        projector = temperley_lieb_projector()
        assert all_zero(invariance_residuals(invariant_element(2, (2, 2), projector), 2))

    def test_temperley_lieb_projector(self):
        projector = temperley_lieb_projector()
        assert projector @ projector == projector * (-(Q + q_power(-1)))
        check_intertwiner(projector, (2, 2))

    def test_non_intertwining_coupon(self):
        rows = [[ZERO] * 4 for _ in range(4)]
        rows[0][0] = ONE
        with pytest.raises(NotAnIntertwiner, match="E"):
            invariant_element(2, (2, 2), AlgebraMatrix(rows, ZERO))

    def test_bad_coloring(self):
        with pytest.raises(ValueError):
            invariant_element(2, (2, 3))
        with pytest.raises(ValueError):
            invariant_element(2, (2,))


class TestSuites:
    def test_center_suite_for_two_sites(self):
        report = run_checks(center_checks(2), "center")
        assert report.passed, [record.witness for record in report.failures()]

    def test_alekseev_suite_for_two_sites(self):
        report = run_checks(alekseev_checks(2, max_degree=2), "alekseev")
        assert report.passed, [record.witness for record in report.failures()]
        assert report.record("alekseev.site_matrix.n2.c1").status is Status.PASS
