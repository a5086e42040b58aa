"""
Tests for the q-Lie bracket, its almost-Jacobi factor and the generalized
Lie structure conditions.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braided_core import (
    BraidedCoreError,
    adjoint_matrices,
    antisymmetry_defect,
    bracket_coefficient,
    bracket_matrix,
    check_almost_jacobi,
    check_bracket_equivariance,
    check_bracket_supported_on_v1,
    check_generalized_lie,
    extract_factor,
    generalized_lie_data,
    holds_with_factor,
    qlie_bracket,
)
from qscalar import QMatrix, QScalar, eval_at, q

U, V, W = (1, 0, 0), (0, 1, 0), (0, 0, 1)

coordinates = st.tuples(*[st.integers(min_value=-3, max_value=3)] * 3)


def at_one(vector):
    return tuple(eval_at(x, 1) for x in vector)


class TestBracketTable:
    """Test cases for the structure constants."""

    def test_coefficient(self):
        assert bracket_coefficient(2) == QScalar(4) / (1 + q ** 4)

    def test_self_brackets_vanish(self, h):
        assert qlie_bracket(U, U, h) == (0, 0, 0)
        assert qlie_bracket(W, W, h) == (0, 0, 0)

    def test_classical_sl2_table(self, h):
        assert at_one(qlie_bracket(U, V, h)) == (-2, 0, 0)
        assert at_one(qlie_bracket(U, W, h)) == (0, 1, 0)
        assert at_one(qlie_bracket(V, W, h)) == (0, 0, -2)

    def test_antisymmetry_defect(self, h):
        M = bracket_coefficient(h)
        assert antisymmetry_defect(h) == ((1 - q * q) * M, QScalar(0), QScalar(0))
        assert at_one(antisymmetry_defect(h)) == (0, 0, 0)

    @settings(max_examples=15, deadline=None)
    @given(coordinates, coordinates, coordinates)
    def test_bilinear(self, a, b, c):
        h = Fraction(1)
        total = tuple(x + y for x, y in zip(b, c))
        expected = tuple(x + y for x, y in zip(qlie_bracket(a, b, h), qlie_bracket(a, c, h)))
        assert qlie_bracket(a, total, h) == expected

    def test_bracket_matrix_columns(self, h):
        B = bracket_matrix(h)
        assert B.shape == (3, 9)
        assert tuple(B[k, 1] for k in range(3)) == qlie_bracket(U, V, h)


class TestEquivariance:
    """Test cases for compatibility with the U_q(sl(2)) action."""

    @pytest.mark.parametrize("h", [Fraction(1), Fraction(2), Fraction(-7, 3)])
    def test_equivariant(self, h):
        assert check_bracket_equivariance(h)

    def test_factors_through_v1(self, h):
        assert check_bracket_supported_on_v1(h)


class TestAlmostJacobi:
    """Test cases for the left-adjoint almost representation."""

    def test_common_factor(self, h):
        result = check_almost_jacobi(h)
        assert result.found
        assert eval_at(result.nu, 1) == Fraction(1, 2)
        assert eval_at(result.lie_normalized_nu, 1) == 1

    def test_factor_is_nontrivial(self, h):
        assert check_almost_jacobi(h).nu != QScalar(Fraction(1, 2))

    def test_zero_h(self):
        with pytest.raises(BraidedCoreError, match="h != 0"):
            check_almost_jacobi(0)

    def test_adjoint_matrices_satisfy_relations(self, h):
        result = check_almost_jacobi(h)
        ad_u, ad_v, ad_w = adjoint_matrices(h)
        assert holds_with_factor(ad_u, ad_v, ad_w, result.nu * 2 * h)

    def test_to_dict(self, h):
        data = check_almost_jacobi(h).to_dict()
        assert data['h'] == '2'
        assert data['failing_relations'] == []

    def test_extract_factor_of_zero(self):
        zero = QMatrix.zeros(2, 2)
        assert extract_factor(zero, zero) is None


class TestGeneralizedLie:
    """Test cases for the conditions on I = V_1 + V_0."""

    @pytest.mark.parametrize("h, c", [(2, 5), (1, 0), (0, 3)])
    def test_conditions_hold(self, h, c):
        report = check_generalized_lie(h, c)
        assert report.all_hold
        assert report.dim_K == report.classical_dim_K

    def test_at_sample_point(self):
        report = check_generalized_lie(2, 5, q0=Fraction(3))
        assert report.all_hold
        assert report.q0 == 3

    def test_alpha_vanishes_on_v0(self, tensor_square):
        data = generalized_lie_data(2, 5)
        assert (data.alpha @ QMatrix.column(tensor_square.spans[0][0])).is_zero()
        assert (data.beta @ QMatrix.column(tensor_square.spans[0][0]))[0, 0] == 5
