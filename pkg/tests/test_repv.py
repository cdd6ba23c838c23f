import pytest

from scalar import ONE, Q, Q_DIFF, ZERO, NotInvertible, q_int, q_power, v_power
from uqsl2 import E, F, K, K_INV, PbwElement, TensorElement, casimir, coproduct
from repv import (
    AlgebraMatrix, embed_legs, flip_matrix, has_odd_laurent_entries, intertwining_residual,
    module, partial_represent, quantum_dimension, quantum_trace, r_matrix, r_matrix_21,
    r_matrix_inverse, represent, representation_residuals, rsd_matrix, tensor_module,
    yang_baxter_residual,
)


def matrix(rows):
    return AlgebraMatrix([[value if not isinstance(value, int) else ONE * value for value in row]
                          for row in rows], ZERO)


class TestModules:
    def test_fundamental_module(self):
        v2 = module(2)
        assert v2.k_matrix == matrix([[Q, 0], [0, q_power(-1)]])
        assert v2.e_matrix == matrix([[0, 1], [0, 0]])
        assert v2.f_matrix == matrix([[0, 0], [1, 0]])

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_relations_hold(self, m):
        assert all(residual.is_zero() for residual in representation_residuals(module(m)).values())

    def test_relations_hold_on_tensor_square(self):
        square = tensor_module(module(2), module(2))
        assert square.weights == (2, 0, 0, -2)
        assert all(residual.is_zero() for residual in representation_residuals(square).values())

    def test_bracket_image(self):
        v2 = module(2)
        assert represent(E * F - F * E, v2) == represent((K - K_INV) / Q_DIFF, v2)

    def test_casimir_on_v3_matches_highest_weight(self):
        v3 = module(3)
        expected = v3.identity() * (q_power(3) + q_power(-3))
        assert represent(casimir(), v3) == expected

    def test_representation_is_multiplicative(self):
        v3 = module(3)
        u = E * F + K
        w = F * F * E + K_INV
        assert represent(u * w, v3) == represent(u, v3) @ represent(w, v3)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_quantum_dimension(self, m):
        assert quantum_dimension(module(m)) == q_int(m)

    def test_quantum_trace_of_identity(self):
        assert quantum_trace(module(2).identity(), module(2)) == Q + q_power(-1)

    def test_partial_representation(self):
        image = partial_represent(coproduct(E), module(2))
        assert image[0, 0] == TensorElement.embed(E, 1, 1)
        assert image[0, 1] == TensorElement.embed(K, 1, 1)
        assert image[1, 1] == TensorElement.embed(E, 1, 1)
        assert not image[1, 0]


class TestRMatrix:
    def test_fundamental_r_matrix(self):
        expected = matrix([
            [Q, 0, 0, 0],
            [0, 1, Q_DIFF, 0],
            [0, 0, 1, 0],
            [0, 0, 0, Q],
        ]) * v_power(-1)
        assert r_matrix(2, 2) == expected

    def test_yang_baxter(self):
        assert yang_baxter_residual(2).is_zero()

    @pytest.mark.parametrize("generator", [E, F, K])
    def test_intertwines_coproducts(self, generator):
        assert intertwining_residual(generator, 2, 2).is_zero()

    def test_intertwines_on_mixed_modules(self):
        assert intertwining_residual(E, 2, 3).is_zero()
        assert intertwining_residual(F, 3, 2).is_zero()

    def test_inverse(self):
        identity = AlgebraMatrix.identity(4, ONE, ZERO)
        assert r_matrix(2, 2) @ r_matrix_inverse(2, 2) == identity

    def test_entries_are_odd_laurent(self):
        assert has_odd_laurent_entries(r_matrix(2, 2))

    def test_flipped_r_matrix(self):
        flip = flip_matrix(2, 2, ONE, ZERO)
        assert flip @ flip == AlgebraMatrix.identity(4, ONE, ZERO)
        assert r_matrix_21(2, 2) == flip @ r_matrix(2, 2) @ flip

    def test_singular_matrix_is_rejected(self):
        with pytest.raises(NotInvertible):
            matrix([[1, 1], [1, 1]]).inverse()


class TestLegs:
    def test_embedding_on_adjacent_legs(self):
        r = r_matrix(2, 2)
        assert embed_legs(r, (0, 1), (2, 2, 2)) == r.kron(module(2).identity())
        assert embed_legs(r, (1, 2), (2, 2, 2)) == module(2).identity().kron(r)

    def test_swapped_legs_give_flipped_matrix(self):
        r = r_matrix(2, 2)
        assert embed_legs(r, (1, 0), (2, 2)) == r_matrix_21(2, 2)


class TestRsdMatrix:
    def test_fundamental_entries(self):
        c = Q_DIFF
        m = rsd_matrix(module(2))
        assert m[0, 0] == K + F * E * (c * c * q_power(-1))
        assert m[0, 1] == F * (c * q_power(-1))
        assert m[1, 0] == K_INV * E * c
        assert m[1, 1] == K_INV

    def test_trivial_module(self):
        m = rsd_matrix(module(1))
        assert m[0, 0] == PbwElement.scalar(1)
