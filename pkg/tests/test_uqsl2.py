import pytest
from hypothesis import given, settings, strategies as st

from scalar import Q, Q_DIFF, RatFunc, q_int, q_power
from uqsl2 import (
    E, F, K, K_INV, UNIT, GrammarError, PbwElement, PbwMonomial, TensorElement, TruncationExceeded,
    action_residual, antipode, antipode_axiom_residual, braid, braid_images, casimir,
    coassociativity_residual, commutator, coproduct, coproduct_at, coproduct_iterated, counit,
    format_element, linearly_independent, multiply_legs, normal_form_product, parse_element,
    relation_residuals, tau_images, verma_action,
)
from uqsl2.configs.uqsl2_config import config
from uqsl2.pbw import _straighten_memo, straighten
from uqsl2.verma import FIELD_V, FIELD_X, as_scalar_multiple

monomials = st.builds(PbwMonomial, st.integers(0, 2), st.integers(-2, 2), st.integers(0, 2))
pbw_elements = st.dictionaries(monomials, st.integers(-3, 3), min_size=1, max_size=3).map(PbwElement)


class TestNormalForm:
    def test_ef_relation(self):
        assert E * F == F * E + (K - K_INV) / Q_DIFF

    def test_k_conjugation(self):
        assert K * E * K_INV == E * q_power(2)
        assert K * F * K_INV == F * q_power(-2)

    def test_e_past_f_squared(self):
        expected = F * (K * q_power(-1) - K_INV * Q) * q_int(2) / Q_DIFF
        assert E * F ** 2 - F ** 2 * E == expected

    def test_named_product(self):
        assert normal_form_product(E, F) == F * E + (K - K_INV) / Q_DIFF
        assert normal_form_product(normal_form_product(K, E), K_INV) == E * q_power(2)
        assert normal_form_product(UNIT, F) == F

    def test_terms_are_canonical(self):
        element = F * E + E * F
        keys = [key for key, _ in element]
        assert keys == sorted(keys)

    def test_memo_is_transparent(self, monkeypatch):
        memoized = E ** 2 * F ** 3
        monkeypatch.setattr(config, "straighten_memo", False)
        assert E ** 2 * F ** 3 == memoized
        assert straighten(3, 2) == _straighten_memo(3, 2)

    @settings(max_examples=20, deadline=None)
    @given(pbw_elements, pbw_elements, pbw_elements)
    def test_associativity(self, a, b, c):
        assert (a * b) * c == a * (b * c)


class TestHopf:
    def test_coproduct_of_generators(self):
        assert coproduct(E) == TensorElement.tensor(E, K) + TensorElement.tensor(UNIT, E)
        assert coproduct(F) == TensorElement.tensor(K_INV, F) + TensorElement.tensor(F, UNIT)
        assert coproduct(K) == TensorElement.tensor(K, K)

    def test_antipode_and_counit(self):
        assert antipode(K) == K_INV
        assert antipode(E) == -(E * K_INV)
        assert counit(K) == 1
        assert counit(E) == 0

    @pytest.mark.parametrize("generator", [E, F, K, K_INV, F * E])
    def test_antipode_axiom(self, generator):
        assert not antipode_axiom_residual(generator)

    @pytest.mark.parametrize("generator", [E, F, K])
    def test_coassociativity(self, generator):
        assert not coassociativity_residual(generator)

    def test_coproduct_is_multiplicative(self):
        assert coproduct(E * F) == coproduct(E) * coproduct(F)

    def test_iterated_coproduct_matches_repeated(self):
        for generator in (E, F, K):
            assert coproduct_iterated(generator, 3) == coproduct_at(coproduct(generator), 2)

    def test_multiply_legs_inverts_embedding(self):
        assert multiply_legs(TensorElement.tensor(F, K, E)) == F * K * E

    def test_antipode_is_antimorphism(self):
        assert antipode(E * F) == antipode(F) * antipode(E)


class TestCasimir:
    def test_central(self):
        omega = casimir()
        assert not commutator(omega, E)
        assert not commutator(omega, F)
        assert not commutator(omega, K)

    def test_counit(self):
        assert counit(casimir()) == Q + q_power(-1)


class TestAutomorphisms:
    @pytest.mark.parametrize("r", [0, 1, 2])
    def test_tau_respects_relations(self, r):
        assert all(not residual for residual in relation_residuals(tau_images(r)).values())

    @pytest.mark.parametrize("r", [0, 1])
    def test_braid_respects_relations(self, r):
        assert all(not residual for residual in relation_residuals(braid_images(r)).values())

    def test_braid_fixes_casimir(self):
        assert braid(casimir(), 1) == casimir()


class TestVerma:
    def test_e_kills_highest_weight(self):
        assert all(not entry for entry in verma_action(E, 0))

    @pytest.mark.parametrize("index", [0, 1, 3])
    def test_casimir_eigenvalue(self, index):
        value = as_scalar_multiple(verma_action(casimir(), index), index)
        q = FIELD_V ** 2
        assert not (value - (q * FIELD_X + 1 / (q * FIELD_X)))

    def test_bracket_on_v1(self):
        q = FIELD_V ** 2
        value = as_scalar_multiple(verma_action(E * F - F * E, 1), 1)
        assert not (value - (FIELD_X / q ** 2 - q ** 2 / FIELD_X) / (q - 1 / q))

    @pytest.mark.parametrize("index", [0, 1, 2, 4])
    def test_weight_drops_by_q_squared(self, index):
        value = as_scalar_multiple(verma_action(K, index), index)
        assert not (value - FIELD_X / FIELD_V ** (4 * index))

    @pytest.mark.parametrize("index", [0, 1, 2])
    def test_k_f_relation_below_top(self, index):
        assert not any(action_residual(K, F, index))
        assert not any(action_residual(E, F, index))
        assert not any(action_residual(F * E, K_INV, index))

    def test_truncation(self):
        with pytest.raises(TruncationExceeded):
            verma_action(F ** 3, 9, truncation=10)

    @settings(max_examples=100, deadline=None)
    @given(pbw_elements, pbw_elements, st.integers(0, 2))
    def test_product_agrees_with_action(self, u, w, index):
        assert not any(action_residual(u, w, index))

    def test_low_degree_monomials_are_independent(self):
        elements = [
            PbwElement.monomial(a, b, c)
            for a in range(3) for c in range(3) for b in range(-2, 3)
            if a + abs(b) + c <= 3
        ]
        assert linearly_independent(elements)

    def test_dependent_family_is_detected(self):
        assert not linearly_independent([E + F, (E + F) * 2])


class TestGrammar:
    @pytest.mark.parametrize("element", [
        PbwElement(),
        casimir(),
        E * F,
        (K - K_INV) / Q_DIFF,
        F * RatFunc(1) / (Q + 1),
    ])
    def test_pbw_round_trip(self, element):
        assert parse_element(format_element(element)) == element

    def test_tensor_round_trip(self):
        element = coproduct(F * E)
        parsed = parse_element(format_element(element))
        assert isinstance(parsed, TensorElement)
        assert parsed == element

    def test_zero_prints_as_zero(self):
        assert format_element(PbwElement()) == "0"

    def test_format_shape(self):
        assert format_element(E) == "[1*v^0] * F^0 K^0 E^1"
        assert str(TensorElement.tensor(E, K)) == "[1*v^0] * F^0 K^0 E^1 (x) F^0 K^1 E^0"

    @pytest.mark.parametrize("text", ["E", "[1*v^0] F^0 K^0 E^1", "[1*v^0] * F^0 K^0 E^1 +"])
    def test_malformed(self, text):
        with pytest.raises(GrammarError):
            parse_element(text)
