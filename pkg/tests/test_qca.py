from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from scalar import PoleAtSpecialization, Q_DIFF
from uqsl2 import E, F, K, K_INV, PbwElement, PbwMonomial, TensorElement, coproduct_iterated, q_bracket_k
from harness.report import witness_of
from graphalg import omega
from rootcenter import slot_coordinates, specialize_element
from qca import (
    CentralLift, DerivationValue, TruncatedSeries, braid_intertwining_residuals, bracket_defect,
    central_lift, closed_exp_f, derivation, derivation_value_residuals, diagonal_lift, exp_series,
    extension_residual, generalized_binomial, invariance_residuals, leibniz_residual,
    lift_independence_residuals, loop_triple_residuals, monomial_word, psi_coefficient, qca_suite,
    script_triple, series_residual, site_coordinate_residuals, triple_defect, triple_residuals,
)
from qca.series import SERIES_TARGETS

monomials = st.builds(PbwMonomial, st.integers(0, 2), st.integers(-1, 1), st.integers(0, 2))
pbw_elements = st.dictionaries(monomials, st.integers(-3, 3), min_size=1, max_size=2).map(PbwElement)


def all_zero(residuals):
    return witness_of(residuals) is None


def at3(element):
    return specialize_element(element, 3)


class TestDerivationValues:
    def test_d_z(self):
        z = central_lift("z", 3)
        assert derivation(z, K, 3) == 0
        assert derivation(z, E, 3) == at3(K ** 3 * E) * Fraction(-1, 3)
        assert derivation(z, F, 3) == at3(K ** 3 * F) * Fraction(1, 3)

    def test_d_e_on_f(self):
        expected = at3(q_bracket_k(1) * E ** 2 * Q_DIFF ** 2) * Fraction(-1, 3)
        assert derivation(central_lift("e", 3), F, 3) == expected

    def test_d_y_on_e(self):
        expected = at3(q_bracket_k(-1) * F ** 2 * Q_DIFF ** 2) * Fraction(1, 3)
        assert derivation(central_lift("y", 3), E, 3) == expected

    @pytest.mark.parametrize("l", [3, pytest.param(5, marks=pytest.mark.slow)])
    def test_golden_table(self, l):
        assert all_zero(derivation_value_residuals(l))

    def test_non_central_element_has_a_pole(self):
        with pytest.raises(PoleAtSpecialization):
            derivation(F, E, 3)

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            derivation(central_lift("x", 3, 1, 2), E, 3)


class TestLiftIndependence:
    @pytest.mark.parametrize("name, u, junk", [
        ("z", E, F),
        ("e", F, K * E),
        ("y", K, PbwElement.scalar(1)),
    ])
    def test_fixed_pairs(self, name, u, junk):
        assert all_zero(lift_independence_residuals(central_lift(name, 3), u, 3, [junk]))

    @settings(max_examples=10, deadline=None)
    @given(pbw_elements)
    def test_random_junk(self, junk):
        assert all_zero(lift_independence_residuals(central_lift("x", 3), F * K, 3, [junk]))


class TestLeibniz:
    @settings(max_examples=10, deadline=None)
    @given(pbw_elements, pbw_elements)
    def test_leibniz_rule(self, u, w):
        assert leibniz_residual(central_lift("y", 3), u, w, 3) == 0

    def test_extension_agrees_with_commutator(self):
        for name in ("x", "y", "z"):
            assert extension_residual(central_lift(name, 3), E * F * K_INV + F ** 2, 3) == 0

    def test_monomial_word(self):
        assert monomial_word((PbwMonomial(1, -2, 1),)) == [(1, "F"), (1, "K_INV"), (1, "K_INV"), (1, "E")]
        assert monomial_word((PbwMonomial(0, 1, 0), PbwMonomial(1, 0, 0))) == [(1, "K"), (2, "F")]

    def test_triple_is_well_defined(self):
        for value in script_triple(1, 3).values():
            assert all_zero(value.relation_residuals())


class TestTriple:
    def test_h_is_a_grading(self):
        h = script_triple(1, 3)["H"]
        assert h(at3(E)) == at3(E) * Fraction(2, 3)
        assert h(at3(F)) == at3(F) * Fraction(-2, 3)
        assert h(at3(K)) == 0

    def test_e_on_k(self):
        coordinates = slot_coordinates(1, 3)
        expected = coordinates["z1"] * coordinates["x1"] * at3(K) * Fraction(1, 3)
        assert script_triple(1, 3)["E"](at3(K)) == expected

    def test_single_slot(self):
        assert all_zero(triple_residuals(1, 3))

    def test_closes_on_the_center_and_k(self):
        residuals = triple_residuals(1, 3)
        for name in ("x1", "y1", "z1", "z_inv1", "omega1", "K", "K_INV"):
            assert residuals[f"[E,F] = H on {name}"] == 0

    def test_commutator_on_e_is_h_plus_an_inner_term(self):
        triple = script_triple(1, 3)
        bracket = triple["E"].bracket(triple["F"])
        defect = triple_defect(1, 3)
        assert bracket.value(1, "E") != triple["H"].value(1, "E")
        assert bracket.value(1, "E") == triple["H"].value(1, "E") + defect.value(1, "E")
        assert bracket.value(1, "F") == triple["H"].value(1, "F") + defect.value(1, "F")
        assert defect.value(1, "K") == 0

    def test_bracket_of_x_and_y(self):
        x, y = central_lift("x", 3), central_lift("y", 3)
        z_inv = central_lift("z_inv", 3).lift
        bracket = TensorElement.identity(1) - x.lift * y.lift - z_inv * z_inv
        d_bracket = DerivationValue.of_central(CentralLift("{x,y}", bracket, 3), 3)
        inner = DerivationValue.inner(bracket_defect(x, y, bracket, 3)) * Fraction(1, 9)
        commuted = DerivationValue.of_central(x, 3).bracket(DerivationValue.of_central(y, 3))
        assert all_zero(commuted.residuals(d_bracket + inner))

    def test_bracket_of_z_and_x_has_no_inner_term(self):
        z, x = central_lift("z", 3), central_lift("x", 3)
        j = bracket_defect(z, x, -(z.lift * x.lift), 3)
        assert all_zero(DerivationValue.inner(j).table)

    def test_diagonal_triple_on_slot_generators(self):
        residuals = triple_residuals(2, 3)
        assert residuals["[H,E] = 2E on E1"] == 0
        assert residuals["[E,F] = H on Delta(K)"] == 0
        assert all_zero(residuals)

    def test_diagonal_triple_uses_the_coproduct(self):
        script_e = script_triple(2, 3)["E"]
        x_delta = diagonal_lift("x", 3, 2)
        z1, z2 = (slot_coordinates(2, 3)[name] for name in ("z1", "z2"))
        expected = DerivationValue.of_central(x_delta, 3).times(z1 * z2)
        assert all_zero(script_e.residuals(expected))
        assert x_delta.lift == coproduct_iterated(central_lift("x", 3).lift.slot_element(), 2)

    @pytest.mark.slow
    def test_diagonal_triple_on_loop_generators(self):
        assert all_zero(loop_triple_residuals(2, 3))

    def test_site_coordinates(self):
        assert all_zero(site_coordinate_residuals(2, 3))


class TestSeries:
    def test_generalized_binomial(self):
        assert generalized_binomial(Fraction(-1, 3), 2) == Fraction(2, 9)
        assert generalized_binomial(Fraction(5), 5) == 1
        assert psi_coefficient(Fraction(1, 3), 0) == Fraction(-1, 3)

    def test_f_fixes_f(self):
        series = exp_series(script_triple(1, 3)["F"], F, 3)
        assert series.coefficient(0) == at3(F)
        assert all(not c for c in series.coefficients[1:])

    def test_first_order_on_k(self):
        coordinates = slot_coordinates(1, 3)
        series = exp_series(script_triple(1, 3)["F"], K, 1)
        assert series.coefficient(1) == coordinates["y1"] * coordinates["z1"] * at3(K) * Fraction(1, 3)

    def test_e_on_y_terminates(self):
        coordinates = slot_coordinates(1, 3)
        x, y, z, z_inv = (coordinates[name] for name in ("x1", "y1", "z1", "z_inv1"))
        series = exp_series(script_triple(1, 3)["E"], y, 4)
        assert series.coefficient(1) == z - x * y * z - z_inv
        assert series.coefficient(2) == x
        assert not series.coefficient(3) and not series.coefficient(4)

    @pytest.mark.parametrize("direction, name", [
        (direction, name) for direction, names in SERIES_TARGETS.items() for name in names])
    def test_closed_forms(self, direction, name):
        assert all_zero(series_residual(direction, name, 3, 3))

    def test_orders_must_match(self):
        _, short = closed_exp_f("F", 3, 1)
        _, longer = closed_exp_f("F", 3, 2)
        with pytest.raises(ValueError):
            short - longer
        assert isinstance(short, TruncatedSeries)

    def test_unknown_closed_form(self):
        with pytest.raises(ValueError):
            closed_exp_f("K_INV E", 3, 1)


class TestInvariance:
    def test_single_site(self):
        assert all_zero(invariance_residuals(1, 3))

    @pytest.mark.parametrize("site", [1, 2])
    def test_diagonal_triple_kills_omega(self, site):
        triple = script_triple(2, 3)
        image = at3(omega(2, site).canonical)
        for key in ("E", "F", "H"):
            assert triple[key](image) == 0

    @pytest.mark.slow
    def test_two_sites(self):
        residuals = invariance_residuals(2, 3)
        assert residuals["E(T_l(qTr M12))"] == 0
        assert residuals["F(T_l(qTr M12))"] == 0
        assert all_zero(residuals)

    def test_braid_intertwining(self):
        residuals = braid_intertwining_residuals(3)
        assert residuals["T_1(x) = y"] == 0
        assert all_zero(residuals)

    def test_suite(self):
        report = qca_suite(1, 3, series_order=2)
        assert report.passed, [record.witness for record in report.failures()]
        assert report.config_echo["series_order"] == 2
