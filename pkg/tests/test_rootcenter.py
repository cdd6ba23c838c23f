import pytest
from hypothesis import given, settings, strategies as st

from scalar import PoleAtSpecialization, Q, Q_DIFF, q_power
from uqsl2 import E, F, K, K_INV, PbwElement, PbwMonomial, casimir, commutator
from harness.report import witness_of
from rootcenter import (
    EpsTensorElement, casimir_chebyshev_residuals, centrality_residuals, centrality_suite,
    closed_form_residuals, commutative_image_residuals, coproduct_frobenius_residuals,
    eps_generators, eps_omega, frobenius, generator_power, phi1_frobenius_lift,
    qbinomial_collapse_residuals, slot_coordinates, specialize_element, threading_checks,
    threaded_trace, threading_identity, threading_identity_checks, threading_residual,
    threading_tuples,
)
from rootcenter.configs.rootcenter_config import config

monomials = st.builds(PbwMonomial, st.integers(0, 2), st.integers(-2, 2), st.integers(0, 2))
pbw_elements = st.dictionaries(monomials, st.integers(-3, 3), min_size=1, max_size=3).map(PbwElement)


def all_zero(residuals):
    return witness_of(residuals) is None


class TestSpecialization:
    def test_casimir_coefficients(self, root3):
        omega = specialize_element(casimir(), root3)
        assert omega.arity == 1
        assert omega.coefficient((PbwMonomial(0, 1, 0),)) == root3.eps
        assert omega.coefficient((PbwMonomial(0, -1, 0),)) == root3.eps ** -1

    def test_ef_relation_survives(self, root3):
        left = specialize_element(commutator(E, F) * Q_DIFF, root3)
        assert left == specialize_element(K - K_INV, root3)

    def test_pole_names_the_monomial(self, root3):
        bad = E / (Q ** 3 - q_power(-3)) + F
        with pytest.raises(PoleAtSpecialization) as excinfo:
            specialize_element(bad, root3)
        assert excinfo.value.where is not None
        assert "E^1" in excinfo.value.where

    def test_roots_do_not_mix(self, root3, root5):
        with pytest.raises(TypeError):
            specialize_element(K, root3) + specialize_element(K, root5)

    def test_identity_and_support(self, root3):
        unit = EpsTensorElement.identity(2, root3)
        assert unit == 1
        assert unit.support() == ()
        assert slot_coordinates(2, 3)["y2"].support() == (2,)

    @settings(max_examples=25, deadline=None)
    @given(pbw_elements, pbw_elements)
    def test_specialization_is_multiplicative(self, a, b):
        assert specialize_element(a * b, 3) == specialize_element(a, 3) * specialize_element(b, 3)


class TestSmallCenter:
    @pytest.mark.parametrize("l", [3, pytest.param(5, marks=pytest.mark.slow)])
    def test_chebyshev_casimir(self, l):
        assert all_zero(casimir_chebyshev_residuals(l))

    def test_qbinomial_collapse(self):
        residuals = qbinomial_collapse_residuals(3)
        assert residuals["[l choose k] vanish"] is True
        assert all_zero({key: value for key, value in residuals.items() if key.startswith("Delta")})

    def test_coordinates_are_central(self):
        coordinates = slot_coordinates(1, 3)
        for name in ("x1", "y1", "z1"):
            assert all_zero(centrality_residuals(coordinates[name], 1, 3))

    def test_z_inverse(self):
        coordinates = slot_coordinates(2, 3)
        assert coordinates["z2"] * coordinates["z_inv2"] == 1


class TestFrobenius:
    def test_single_site_images(self):
        coordinates = slot_coordinates(1, 3)
        image = frobenius(1, 3, 1)
        assert image.d == coordinates["z_inv1"]
        assert image.c == -coordinates["x1"]
        assert image.b == coordinates["y1"]

    def test_single_site_matches_generic_lift(self):
        image = frobenius(1, 3, 1)
        for name, lift in phi1_frobenius_lift(3).items():
            assert image.entries()[name] == specialize_element(lift, 3)

    def test_trace_is_chebyshev_of_omega(self):
        image = frobenius(2, 3, 2)
        omega = eps_omega(2, 3, 2)
        assert image.trace() == omega * omega * omega - omega * 3

    def test_determinant(self):
        assert frobenius(1, 3, 1).determinant_residual() == 0

    def test_powers_are_central(self):
        assert all_zero(centrality_residuals(generator_power(1, 3, "b1"), 1, 3))
        assert commutator(generator_power(2, 3, "b1"), eps_generators(2, 3)["a2"]) == 0

    def test_plain_generators_are_not_central(self):
        assert not all_zero(centrality_residuals(eps_generators(1, 3)["b1"], 1, 3))

    def test_site_out_of_range(self):
        with pytest.raises(ValueError):
            frobenius(2, 3, 3)

    def test_even_order_is_rejected(self):
        with pytest.raises(ValueError):
            frobenius(1, 4, 1)

    @pytest.mark.parametrize("site", [1, 2])
    def test_closed_forms_two_sites(self, site):
        assert all_zero(closed_form_residuals(2, 3, site))

    @pytest.mark.slow
    def test_closed_forms_three_sites(self):
        for site in (1, 2, 3):
            assert all_zero(closed_form_residuals(3, 3, site))

    def test_image_is_commutative(self):
        assert all_zero(commutative_image_residuals(2, 3))

    def test_coproduct_of_frobenius_matrix(self):
        assert all_zero(coproduct_frobenius_residuals(2, 3))

    def test_suite_single_site(self):
        report = centrality_suite(1, 3)
        assert report.passed, [record.witness for record in report.failures()]
        assert report.record("frobenius.closed_form.n1.l3.site1").witness is None

    @pytest.mark.slow
    def test_suite_two_sites_at_five(self):
        report = centrality_suite(2, 5, jobs=2)
        assert report.passed, [record.witness for record in report.failures()]


class TestThreading:
    def test_consecutive_tuples(self):
        assert threading_tuples(3, general=False) == [(1,), (2,), (3,), (1, 2), (2, 3), (1, 2, 3)]

    def test_general_tuples(self, monkeypatch):
        monkeypatch.setattr(config, "general_tuples", True)
        assert (1, 3) in threading_tuples(3)

    def test_tuple_length_is_bounded(self, monkeypatch):
        monkeypatch.setattr(config, "max_threading_sites", 2)
        assert max(map(len, threading_tuples(4, general=True))) == 2

    def test_unordered_sites_raise(self):
        with pytest.raises(ValueError):
            threading_identity_checks(3, 3, (2, 1))
        with pytest.raises(ValueError):
            threading_identity_checks(2, 3, (1, 3))

    def test_single_site(self):
        assert threading_residual(1, 3, (1,)) == 0
        assert threaded_trace(1, 3, (1,)) == frobenius(1, 3, 1).trace()
        report = threading_identity(1, 3, (1,))
        assert report.passed, [record.witness for record in report.failures()]
        assert report.summary["pass"] == 2
        # records are sorted by id
        assert [record.identity_id for record in report.records] == [
            "threading.central.n1.l3.sites1", "threading.trace.n1.l3.sites1"]

    def test_check_ids(self):
        ids = [check.identity_id for check in threading_checks(2, 3)]
        assert "threading.trace.n2.l3.sites12" in ids
        assert "threading.central.n2.l3.sites2" in ids

    @pytest.mark.slow
    def test_two_sites(self):
        assert threading_residual(2, 3, (1, 2)) == 0
        report = threading_identity(2, 3, (1, 2), jobs=2)
        assert report.passed, [record.witness for record in report.failures()]
