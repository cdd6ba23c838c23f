import json
import threading
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings, strategies as st

from uqsl2 import E
from harness.report import witness_of
from rootcenter import slot_coordinates, specialize_element
from poisson import (
    NotInSmallCenter, casimir_residuals, classical_invariance_residuals, conjugated_matrix,
    conjugation_field, coordinate_space, dressing_matrix, dressing_residuals, dressing_space,
    fr_bracket, fr_is_poisson, fr_poisson_residual, fr_poisson_residuals, frobenius_determinants,
    from_coordinates, from_dressing, generator_pairs, group_law_and_psi, group_law_residuals,
    matrix_space, model_agreement_residuals, odd_square_root_terms, poisson_suite, psi,
    qca_bracket_from_derivations, qca_bracket_model, script_m, to_coordinates, dressing_identity,
)


def all_zero(residuals):
    return witness_of(residuals) is None


@pytest.fixture(scope="module")
def coords():
    return coordinate_space(1).gens()


@pytest.fixture(scope="module")
def entries():
    return matrix_space(1).gens()


class TestCommPoly:
    def test_inverse_relation(self, coords):
        assert coords["z1"] * coords["z_inv1"] == 1

    def test_determinant_relation(self, entries):
        assert entries["a1"] * entries["d1"] - entries["b1"] * entries["c1"] == 1

    @settings(max_examples=20, deadline=None)
    @given(st.integers(-5, 5), st.integers(-5, 5))
    def test_normal_form_is_structural(self, i, j):
        g = coordinate_space(1).gens()
        left = (g["x1"] * i + g["z1"] * j) * g["z_inv1"]
        assert left == g["x1"] * g["z_inv1"] * i + j

    def test_spaces_do_not_mix(self, coords, entries):
        with pytest.raises(TypeError):
            coords["x1"] + entries["a1"]

    def test_unknown_variable(self):
        with pytest.raises(KeyError):
            coordinate_space(1).gen("x2")


class TestCoordinates:
    def test_reads_slot_coordinates(self, coords):
        values = slot_coordinates(1, 3)
        for name in ("x1", "y1", "z1", "z_inv1"):
            assert to_coordinates(values[name]) == coords[name]

    def test_product_of_coordinates(self, coords):
        values = slot_coordinates(1, 3)
        element = values["x1"] * values["y1"] * values["z1"] - values["z_inv1"]
        assert to_coordinates(element) == coords["x1"] * coords["y1"] * coords["z1"] - coords["z_inv1"]

    def test_round_trip_through_elements(self, coords):
        poly = coords["x1"] * coords["y1"] + coords["z_inv1"] * 2
        assert to_coordinates(from_coordinates(poly, 3)) == poly

    def test_outside_small_center(self):
        with pytest.raises(NotInSmallCenter):
            to_coordinates(specialize_element(E, 3))

    def test_odd_square_root_does_not_come_back(self):
        zp = dressing_space(1).gen("zp1")
        assert odd_square_root_terms(zp) == {"zp1": 1}
        with pytest.raises(ValueError):
            from_dressing(zp)


class TestFockRosly:
    def test_single_site_value(self, entries):
        table = fr_bracket(1)
        assert table.value("d1", "b1") == -(entries["b1"] * entries["d1"])
        assert table.value("b1", "d1") == entries["b1"] * entries["d1"]

    def test_literal_variant_differs_on_d_b(self, entries):
        assert fr_bracket(1, literal=True).value("d1", "b1") == entries["a1"] * entries["b1"]
        assert fr_bracket(1, literal=True).value("d1", "b1") != fr_bracket(1).value("d1", "b1")

    def test_cross_site_value(self):
        g = matrix_space(2).gens()
        assert fr_bracket(2).value("d1", "d2") == -(g["c1"] * g["b2"])

    def test_self_brackets_vanish(self):
        table = fr_bracket(1)
        for name in table.space.names:
            assert table.value(name, name) == 0

    @pytest.mark.parametrize("n", [1, 2])
    def test_axioms(self, n):
        table = fr_bracket(n)
        assert all_zero(table.antisymmetry_residuals())
        assert all_zero(table.jacobi_residuals())

    def test_classical_invariance(self):
        assert all_zero(classical_invariance_residuals(2))

    def test_conjugation_field_moves_a_single_entry(self, entries):
        assert conjugation_field("X", entries["a1"]) == entries["c1"]
        with pytest.raises(ValueError):
            conjugation_field("Z", entries["a1"])


class TestSmallCenterBracket:
    def test_model_values(self, coords):
        table = qca_bracket_model(1)
        x, y, z, z_inv = coords["x1"], coords["y1"], coords["z1"], coords["z_inv1"]
        assert table.value("y1", "x1") == -1 + x * y + z_inv * z_inv
        assert table.value("x1", "y1") == 1 - x * y - z_inv * z_inv
        assert table.value("z1", "x1") == -(z * x)
        assert table.value("z1", "y1") == y * z

    def test_sites_commute(self):
        assert qca_bracket_model(2).value("z1", "x2") == 0

    def test_casimir(self):
        assert all_zero(casimir_residuals(2))

    def test_axioms(self):
        table = qca_bracket_model(2)
        assert all_zero(table.antisymmetry_residuals())
        assert all_zero(table.jacobi_residuals())

    def test_derived_values(self, coords):
        x, y, z, z_inv = coords["x1"], coords["y1"], coords["z1"], coords["z_inv1"]
        assert qca_bracket_from_derivations(("y", "x"), 3) == -1 + x * y + z_inv * z_inv
        assert qca_bracket_from_derivations(("z", "y"), 3) == y * z
        assert qca_bracket_from_derivations(("omega", "x"), 3) == 0

    def test_derived_table_matches_model(self):
        assert all_zero(model_agreement_residuals(1, 3))

    @pytest.mark.slow
    def test_derived_table_matches_model_at_five(self):
        assert all_zero(model_agreement_residuals(1, 5))

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            qca_bracket_from_derivations(("w", "x"), 3)

    def test_json_export(self):
        table = qca_bracket_model(1)
        data = json.loads(table.to_json())
        assert data["n"] == 1
        assert data["brackets"]["x1,y1"] == str(table.value("x1", "y1"))


class TestDressing:
    def test_last_site_is_undressed(self):
        space = dressing_space(2)
        assert dressing_matrix(2, 2) == [[space.one, space.zero], [space.zero, space.one]]
        assert conjugated_matrix(2, 2) == script_m(space, 2)

    def test_lower_left_entry(self):
        g = dressing_space(2).gens()
        assert conjugated_matrix(2, 1)[1][0] == -(g["x1"] * g["zp_inv2"] ** 2)

    @pytest.mark.parametrize("site", [1, 2])
    def test_two_sites(self, site):
        assert all_zero(dressing_residuals(2, 3, site))

    @pytest.mark.slow
    @pytest.mark.parametrize("site", [1, 2, 3])
    def test_three_sites(self, site):
        assert all_zero(dressing_residuals(3, 3, site))

    def test_site_out_of_range(self):
        with pytest.raises(ValueError):
            dressing_residuals(2, 3, 3)

    def test_report(self):
        report = dressing_identity(2, 3)
        assert report.passed, [record.witness for record in report.failures()]
        assert report.summary["total"] == 2


class TestGroupLaw:
    def test_residuals(self):
        assert all_zero(group_law_residuals())

    def test_unit(self):
        space = dressing_space(1)
        unit = [[space.one, space.zero], [space.zero, space.one]]
        values = psi(unit, unit)
        assert (values["x"], values["y"], values["z"]) == (0, 0, 1)

    def test_report(self):
        assert group_law_and_psi().passed


class TestFrIsPoisson:
    def test_determinants(self):
        assert all_zero(frobenius_determinants(2, 3))

    def test_pairs(self):
        assert len(generator_pairs(1)) == 10
        pairs = generator_pairs(2, sample=4, seed=1)
        assert pairs[0] == ("d1", "d2")
        assert len(pairs) == 4
        assert len(generator_pairs(2, sample=0)) == 16

    def test_model_route_single_site(self):
        assert all_zero(fr_poisson_residuals(1, 3, route="model"))

    @pytest.mark.parametrize("f, g", [("d1", "b1"), ("a1", "c1"), ("d1", "d1")])
    def test_derivation_route(self, f, g):
        assert fr_poisson_residual(f, g, 1, 3) == 0

    def test_literal_variant_fails(self):
        assert fr_poisson_residual("d1", "b1", 1, 3, route="model", literal=True) != 0

    def test_cross_site_model_route(self):
        assert fr_poisson_residual("d1", "d2", 2, 3, route="model") == 0

    def test_unknown_route(self):
        with pytest.raises(ValueError):
            fr_poisson_residual("d1", "b1", 1, 3, route="matrix")

    @pytest.mark.slow
    def test_report_two_sites(self):
        report = fr_is_poisson(2, 3, jobs=2)
        assert report.passed, [record.witness for record in report.failures()]

    @pytest.mark.slow
    def test_suite(self):
        report = poisson_suite(2, 3)
        assert report.passed, [record.witness for record in report.failures()]


def _clear_spaces():
    for factory in (coordinate_space, matrix_space, dressing_space):
        factory.cache_clear()


def _outcomes(report):
    return [(record.identity_id, record.status, record.witness) for record in report.records]


class TestConcurrency:
    def test_rebuilt_space_is_equal(self):
        before = coordinate_space(1)
        coordinate_space.cache_clear()
        after = coordinate_space(1)
        assert after == before
        assert hash(after) == hash(before)
        assert before.gen("x1") + after.gen("y1") == after.gen("x1") + before.gen("y1")
        assert after != matrix_space(1)

    def test_spaces_built_from_many_threads(self):
        _clear_spaces()
        barrier = threading.Barrier(8)

        def build(_):
            barrier.wait()
            return coordinate_space(2), dressing_space(2)

        with ThreadPoolExecutor(max_workers=8) as pool:
            built = list(pool.map(build, range(8)))
        assert all(coordinates is built[0][0] for coordinates, _ in built)
        assert all(dressing is built[0][1] for _, dressing in built)
        total = sum((coordinates.gen("x1") for coordinates, _ in built), built[0][0].zero)
        assert total == built[0][0].gen("x1") * 8

    def test_suite_does_not_depend_on_jobs(self):
        _clear_spaces()
        serial = poisson_suite(1, 3, jobs=1)
        _clear_spaces()
        parallel = poisson_suite(1, 3, jobs=4)
        assert serial.passed, [record.witness for record in serial.failures()]
        assert _outcomes(parallel) == _outcomes(serial)
