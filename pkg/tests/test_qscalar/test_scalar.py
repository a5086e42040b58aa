"""
Tests for QScalar, CScalar and the q-integers.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field

from qscalar import (
    ArithOp,
    CScalar,
    PoleError,
    QScalar,
    ScalarDivisionError,
    ScalarParseError,
    ZeroPointError,
    arith,
    canonicalize,
    eval_at,
    q,
    qint,
)

from .strategies import (
    laurent_polynomials,
    nonzero_laurent_polynomials,
    rational_functions,
    sample_points,
)

PROPERTY_SETTINGS = settings(max_examples=30, deadline=None)


class TestConstruction:
    """Test cases for wrapping raw field elements."""

    def test_generator_wraps_field_element(self):
        assert isinstance(q.value, FracElement)
        assert QScalar(q.value) == q

    def test_parsed_value_wraps(self):
        x = QScalar.parse("q^2 - 1")
        assert QScalar(x.value) == x

    def test_foreign_field_rejected(self):
        _, t = field("t", QQ)
        with pytest.raises(TypeError, match="Cannot build QScalar"):
            QScalar(t)

    def test_unsupported_type_rejected(self):
        with pytest.raises(TypeError, match="Cannot build QScalar from float"):
            QScalar(0.5)


class TestQInt:
    """Test cases for the q-integers b_i."""

    def test_small_values(self):
        assert qint(0) == 0
        assert str(qint(2)) == "q + q^-1"
        assert str(qint(3)) == "q^2 + 1 + q^-2"

    def test_odd_in_i(self):
        for i in range(1, 6):
            assert qint(-i) == -qint(i)

    def test_recurrence(self):
        T = q + QScalar.q_power(-1)
        for i in range(1, 11):
            assert qint(i + 1) == T * qint(i) - qint(i - 1)

    def test_classical_limit(self):
        assert eval_at(qint(5), 1) == 5
        assert eval_at(qint(2), 2) == Fraction(5, 2)


class TestArithmetic:
    """Test cases for exact field operations and canonical forms."""

    def test_cancellation(self):
        assert arith(q - 1, q + 1, ArithOp.MUL) == q * q - 1
        assert arith(q * q - 1, q - 1, ArithOp.DIV) == q + 1
        assert str(qint(2) * qint(2)) == "q^2 + 2 + q^-2"

    def test_division_by_zero(self):
        with pytest.raises(ScalarDivisionError, match="zero"):
            arith(q, QScalar(0), ArithOp.DIV)

    def test_division_error_is_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            QScalar(1) / 0

    def test_negative_power_of_zero(self):
        with pytest.raises(ScalarDivisionError):
            QScalar(0) ** -1

    def test_mixed_operands(self):
        assert 1 + q == q + 1
        assert Fraction(1, 2) * q == q / 2
        assert 2 - q == -(q - 2)

    def test_structural_equality_after_reduction(self):
        x = (q ** 3 - q) / (q * q - 1)
        assert x == q
        assert hash(x) == hash(q)

    def test_constants(self):
        assert QScalar(Fraction(5, 3)).is_constant()
        assert QScalar(Fraction(5, 3)).to_fraction() == Fraction(5, 3)
        assert not q.is_constant()
        with pytest.raises(ValueError, match="depends on q"):
            q.to_fraction()

    @PROPERTY_SETTINGS
    @given(laurent_polynomials(), laurent_polynomials(), laurent_polynomials())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @PROPERTY_SETTINGS
    @given(nonzero_laurent_polynomials())
    def test_inverses(self, a):
        assert a * a.inverse() == 1
        assert a - a == 0

    @PROPERTY_SETTINGS
    @given(rational_functions())
    def test_canonicalize_idempotent(self, x):
        assert canonicalize(canonicalize(x)) == canonicalize(x)
        assert canonicalize(x) == x


class TestEvaluation:
    """Test cases for evaluation at rational points."""

    def test_removable_singularity(self):
        assert eval_at((q * q - 1) / (q - 1), 1) == 2

    def test_pole(self):
        with pytest.raises(PoleError, match="pole at q = 1"):
            eval_at(QScalar(1) / (q - 1), 1)

    def test_zero_point(self):
        with pytest.raises(ZeroPointError, match="q = 0"):
            eval_at(q, 0)

    @PROPERTY_SETTINGS
    @given(laurent_polynomials(), laurent_polynomials(), sample_points())
    def test_ring_morphism(self, a, b, q0):
        assert eval_at(a * b, q0) == eval_at(a, q0) * eval_at(b, q0)
        assert eval_at(a + b, q0) == eval_at(a, q0) + eval_at(b, q0)


class TestParsing:
    """Test cases for the rendering grammar."""

    def test_descending_powers(self):
        assert str(QScalar.parse("q^-2 + 1 + q^2")) == "q^2 + 1 + q^-2"
        assert str(QScalar(Fraction(5, 3))) == "5/3"
        assert str(-q) == "-q"

    def test_both_power_operators(self):
        assert QScalar.parse("q**2 + 1") == QScalar.parse("q^2 + 1")

    def test_rational_function(self):
        x = QScalar.parse("(q^2 + 1)/(q^4 + 1)")
        assert x * (q ** 4 + 1) == q * q + 1

    def test_empty_string(self):
        with pytest.raises(ScalarParseError, match="empty"):
            QScalar.parse("  ")

    def test_malformed(self):
        with pytest.raises(ScalarParseError, match="Cannot parse"):
            QScalar.parse("q^^")

    @PROPERTY_SETTINGS
    @given(rational_functions())
    def test_render_parses_back(self, x):
        assert QScalar.parse(x.render()) == x


class TestCScalar:
    """Test cases for complexified scalars."""

    def test_imaginary_unit(self):
        i = CScalar.i()
        assert i * i == CScalar(-1)
        assert i.conj() == -i

    def test_division(self):
        one_plus_i = CScalar(1, 1)
        one_minus_i = CScalar(1, -1)
        assert one_plus_i / one_minus_i == CScalar.i()

    def test_norm_and_reality(self):
        z = CScalar(q, 2)
        assert z.norm() == q * q + 4
        assert not z.is_real()
        assert CScalar.of(q).is_real()

    def test_of_rejects_strings(self):
        with pytest.raises(TypeError, match="Cannot build CScalar"):
            CScalar.of("q")

    def test_rendering(self):
        assert str(CScalar(1, 1)) == "1 + i"
        assert str(CScalar(0, 2)) == "i*(2)"
