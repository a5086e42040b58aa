"""
Tests for the module V, the decomposition of V x V and the braiding.
"""

import pytest

from braided_core import (
    T,
    braiding_operator,
    build_v_module,
    casimir_tensor,
    check_highest_weight_vectors,
    check_projectors,
    flip_operator,
    tensor_power_action,
    tensor_vector,
)
from qscalar import QMatrix, QScalar, q
from uq_modules import Generator, check_uq_relations


class TestVModule:
    """Test cases for the 3-dimensional module V."""

    def test_action_on_basis(self):
        v_module = build_v_module()
        assert v_module.action_on(Generator.X, 'v') == {'u': -T}
        assert v_module.action_on(Generator.Y, 'u') == {'v': QScalar(-1)}
        assert v_module.action_on(Generator.X, 'u') == {}
        assert [v_module.weight(label) for label in ('u', 'v', 'w')] == [2, 0, -2]

    def test_is_a_module(self):
        assert check_uq_relations(build_v_module().module)

    def test_single_factor(self):
        for gen in Generator:
            assert tensor_power_action(gen, 1) == build_v_module().matrix(gen)

    def test_weights_add_on_tensor_square(self):
        action = tensor_power_action(Generator.H, 2)
        assert action == QMatrix.diag([4, 2, 0, 2, 0, -2, 0, -2, -4])


class TestDecomposition:
    """Test cases for V x V = V_0 + V_1 + V_2."""

    def test_dimensions(self, tensor_square):
        assert tensor_square.dims == (1, 3, 5)

    def test_casimir_vector(self, tensor_square):
        assert tensor_square.spans[0][0] == casimir_tensor()
        assert casimir_tensor() == tensor_vector({'uw': q ** 3 + q, 'vv': 1, 'wu': T})

    def test_highest_weight_vectors(self):
        assert check_highest_weight_vectors()

    def test_projector_identities(self):
        assert check_projectors()

    def test_projector_ranks(self, tensor_square):
        assert [P.rank() for P in tensor_square.projectors] == [1, 3, 5]


class TestBraiding:
    """Test cases for S = P_0 - P_1 + P_2."""

    def test_involutive(self):
        S = braiding_operator()
        assert S @ S == QMatrix.identity(9)

    def test_classical_limit_is_flip(self):
        assert braiding_operator().eval_at(1) == flip_operator()

    def test_not_the_flip_for_generic_q(self):
        assert braiding_operator() != flip_operator()

    @pytest.mark.parametrize("gen", list(Generator))
    def test_commutes_with_action(self, gen):
        action = tensor_power_action(gen, 2)
        S = braiding_operator()
        assert S @ action == action @ S
