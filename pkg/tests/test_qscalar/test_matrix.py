"""
Tests for QMatrix exact linear algebra.
"""

from fractions import Fraction

import pytest

from qscalar import MatrixShapeError, QMatrix, QScalar, SingularMatrixError, q


class TestConstruction:
    """Test cases for matrix constructors and shape checks."""

    def test_band_constructors(self):
        assert QMatrix.superdiag([1, 2]) == QMatrix([[0, 1, 0], [0, 0, 2], [0, 0, 0]])
        assert QMatrix.subdiag([1, 2]) == QMatrix.superdiag([1, 2]).transpose()
        assert QMatrix.diag([q, 1]).trace() == q + 1

    def test_ragged_rows(self):
        with pytest.raises(MatrixShapeError, match="Ragged"):
            QMatrix([[1, 2], [3]])

    def test_empty(self):
        with pytest.raises(MatrixShapeError, match="at least one row"):
            QMatrix([])

    def test_product_shape(self):
        with pytest.raises(MatrixShapeError, match="Cannot multiply"):
            QMatrix.identity(2) @ QMatrix.identity(3)

    def test_string_grid(self):
        M = QMatrix([[q, QScalar(1) / (q + 1)], [0, Fraction(-1, 2)]])
        assert QMatrix.from_strings(M.to_strings()) == M

    def test_immutable(self):
        with pytest.raises(AttributeError, match="immutable"):
            QMatrix.identity(2).extra = 1


class TestLinearAlgebra:
    """Test cases for rank, nullspace, solve and inverse over Q(q)."""

    def test_rank_and_nullspace(self, singular_matrix):
        assert singular_matrix.rank() == 1
        (vector,) = singular_matrix.nullspace()
        assert (singular_matrix @ QMatrix.column(vector)).is_zero()

    def test_singular_inverse(self, singular_matrix):
        with pytest.raises(SingularMatrixError, match="singular"):
            singular_matrix.inverse()

    def test_inverse(self):
        M = QMatrix([[q, 1], [0, q]])
        assert M @ M.inverse() == QMatrix.identity(2)
        assert M ** -1 == M.inverse()

    def test_solve(self):
        M = QMatrix([[q, 1], [0, q]])
        solution = M.solve([1, q])
        assert M @ QMatrix.column(solution) == QMatrix.column([1, q])
        assert QMatrix([[1, q], [1, q]]).solve([0, 1]) is None

    def test_left_nullspace(self, singular_matrix):
        (vector,) = singular_matrix.left_nullspace()
        assert (QMatrix([vector]) @ singular_matrix).is_zero()

    def test_kron(self):
        K = QMatrix.diag([1, q]).kron(QMatrix.superdiag([1]))
        assert K.shape == (4, 4)
        assert K[3, 2] == 0
        assert K[2, 3] == q

    def test_scalar_value(self):
        assert QMatrix.identity(3).scale(q).scalar_value() == q
        assert QMatrix.diag([1, 2]).scalar_value() is None


class TestEvaluation:
    """Test cases for evaluation at a point and denominators."""

    def test_rank_drops_at_special_point(self):
        M = QMatrix([[1, 1], [1, q * q]])
        assert M.rank() == 2
        assert M.rank_at(1) == 1
        assert M.rank_at(-1) == 1

    def test_denominators(self):
        M = QMatrix([[QScalar(1) / (q * q + 1), q], [Fraction(1, 3), 0]])
        assert M.denominators() == {q * q + 1}

    def test_eval_at(self):
        M = QMatrix([[q, QScalar.q_power(-1)]])
        assert M.eval_at(2) == QMatrix([[2, Fraction(1, 2)]])
