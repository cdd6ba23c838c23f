import pytest
from hypothesis import given, settings, strategies as st

from scalar import root_of_unity
from harness.report import witness_of
from graphalg import eta, omega
from rootcenter import specialize_element
from skein import (
    CurveSpec, CurveSpecError, boundary_monomials, boundary_residuals, chebyshev_center_suite,
    coefficient_rank, commutativity_residuals, consecutive_arcs, curve_threading_residual,
    eigenvalue_residuals, exponent_tuples, factorization_residuals, independence_witness,
    intertwiner_residuals, kauffman_projector, kauffman_r_identity, linking_residuals, loop_value,
    loop_value_residuals, parse_curve, rank_one_residuals, skein_relation_residuals, skein_suite,
    wilson_curve,
)


def all_zero(residuals):
    return witness_of(residuals) is None


class TestKauffman:
    @pytest.mark.parametrize("l", [3, 5])
    def test_relations(self, l):
        assert all_zero(skein_relation_residuals(l))

    @pytest.mark.parametrize("l", [3, 5])
    def test_intertwiner(self, l):
        assert all_zero(intertwiner_residuals(l))

    def test_rank_one(self):
        assert all_zero(rank_one_residuals(3))

    def test_loop_value(self):
        root = root_of_unity(3)
        assert loop_value(3) == root.eps + root.eps.inverse()
        assert all_zero(loop_value_residuals(3))

    def test_eigenvalues(self):
        assert all_zero(eigenvalue_residuals(5))

    def test_projector_square(self):
        u = kauffman_projector(3)
        assert u @ u == u * loop_value(3)

    def test_report(self):
        report = kauffman_r_identity(3)
        assert report.passed, [record.witness for record in report.failures()]
        assert report.summary["total"] == 5


class TestCurveSpec:
    @pytest.mark.parametrize("text, expected", [
        ("boundary:2", CurveSpec.boundary(2)),
        ("outer", CurveSpec.outer()),
        ("arc:1..3", CurveSpec.arc(1, 3)),
        ("arc:2", CurveSpec.arc(2, 1)),
        ("arc:1..2^3", CurveSpec.arc(1, 2, power=3)),
        ("boundary:1@-1", CurveSpec.boundary(1, linking=-1)),
    ])
    def test_parse(self, text, expected):
        assert parse_curve(text) == expected

    def test_power_l(self):
        assert parse_curve("arc:1..3^l", l=5).power == 5
        with pytest.raises(CurveSpecError):
            parse_curve("arc:1..3^l")

    @pytest.mark.parametrize("text", ["", "loop:1", "arc:3..1", "outer:2", "boundary:1..2", "boundary"])
    def test_rejects(self, text):
        with pytest.raises(CurveSpecError):
            parse_curve(text)

    @settings(max_examples=30)
    @given(st.integers(1, 4), st.integers(1, 3), st.integers(1, 5), st.integers(-3, 3))
    def test_label_parses_back(self, site, length, power, linking):
        spec = CurveSpec.arc(site, length, power, linking)
        assert parse_curve(spec.label()) == spec

    def test_validate(self):
        with pytest.raises(CurveSpecError):
            CurveSpec.arc(2, 2).validate(2)
        assert CurveSpec.outer().sites(3) == (1, 2, 3)

    def test_consecutive_arcs(self):
        assert len(consecutive_arcs(3)) == 6


class TestWilsonCurves:
    @pytest.mark.parametrize("n", [1, 2])
    def test_boundary_images(self, n):
        assert all_zero(boundary_residuals(n))

    def test_arc_over_two_sites_is_eta(self):
        assert wilson_curve(CurveSpec.arc(1, 2), 2).canonical == eta(2).canonical

    def test_chebyshev_power(self):
        w = omega(1, 1).canonical
        assert wilson_curve(CurveSpec.boundary(1, power=2), 1).canonical == w * w - 2

    def test_odd_linking_needs_a_root(self):
        with pytest.raises(CurveSpecError):
            wilson_curve(CurveSpec.boundary(1, linking=1), 1)

    def test_linking(self):
        assert all_zero(linking_residuals(3))

    def test_specialized_value(self):
        value = wilson_curve(CurveSpec.boundary(1), 1, 3)
        assert value == specialize_element(omega(1, 1).canonical, 3)

    @pytest.mark.parametrize("n", [1, 2])
    def test_factorization(self, n):
        assert all_zero(factorization_residuals(n))

    def test_commutative(self):
        assert all_zero(commutativity_residuals(2))


class TestIndependence:
    def test_exponent_tuples(self):
        tuples = exponent_tuples(3, 2)
        assert len(tuples) == 10
        assert tuples[0] == (0, 0, 0)

    def test_monomial_count(self):
        assert len(boundary_monomials(2, 2)) == 10
        assert len(boundary_monomials(1, 3)) == 4

    def test_two_sites(self):
        assert independence_witness(2, 2) is None

    def test_dependent_family_is_reported(self):
        # eta equals omega1 for a single puncture
        assert coefficient_rank([omega(1, 1).canonical, eta(1).canonical], 2) == 1

    @pytest.mark.slow
    def test_three_sites(self):
        assert independence_witness(3, 3) is None


class TestThreading:
    @pytest.mark.parametrize("spec", consecutive_arcs(2), ids=str)
    def test_threading(self, spec):
        assert curve_threading_residual(spec, 2, 3) == 0

    def test_chebyshev_center_suite(self):
        report = chebyshev_center_suite(2, 3)
        assert report.passed, [record.witness for record in report.failures()]

    @pytest.mark.slow
    def test_chebyshev_center_suite_three_sites(self):
        report = chebyshev_center_suite(3, 3, jobs=2)
        assert report.passed, [record.witness for record in report.failures()]

    def test_skein_suite_with_curves(self):
        report = skein_suite(1, 3, degree=2, curves=[parse_curve("boundary:1^3")])
        assert report.passed, [record.witness for record in report.failures()]
        assert report.config_echo["curves"] == ["boundary:1^3"]
