"""
Tests for involutions compatible with the q-Lie bracket.
"""

from fractions import Fraction

import pytest
import sympy

from qscalar import CScalar, q
from trace_involution import (
    DegenerateParameterError,
    InvolutionCandidate,
    InvolutionPreconditionError,
    check_extension_consistency,
    check_involution,
    check_odd_subalgebra,
    classify_involutions,
    compact_candidate,
    compatibility_equations,
    even_part_witness,
    involution_residuals,
    is_consistent,
    minus_identity,
    odd_part_basis,
    render_cvector,
    split_involution,
    unit_circle_candidate,
)
from trace_involution.involutions import COEFFICIENT_NAMES

H = Fraction(2)


class TestCompatibility:
    """Test cases for [a*, b*] = -([a, b])*."""

    def test_named_involutions(self):
        assert check_involution(minus_identity(), H)
        assert check_involution(split_involution(), H)

    def test_compact_form_rejected(self):
        assert not check_involution(compact_candidate(), H)
        assert involution_residuals(compact_candidate(), H)

    def test_unit_circle_family(self):
        candidate = unit_circle_candidate(CScalar.i())
        assert candidate.is_involutive()
        assert check_involution(candidate, H)

    def test_at_sample_point(self):
        assert check_involution(split_involution(), H, q0=3)

    def test_candidate_shape(self):
        with pytest.raises(ValueError, match="3x3"):
            InvolutionCandidate.from_rows([[1, 0], [0, 1]])


class TestClassification:
    """Test cases for the real compatible involutions."""

    def test_exactly_two(self):
        result = classify_involutions(H)
        assert [candidate.name for candidate in result.candidates] == ["-id", "diag(1,-1,1)"]

    def test_at_sample_point(self):
        assert len(classify_involutions(H, q0=2).candidates) == 2

    def test_zero_h(self):
        with pytest.raises(InvolutionPreconditionError, match="bracket vanishes"):
            classify_involutions(0)

    @pytest.mark.parametrize("q0", [0, 1, -1])
    def test_degenerate_points(self, q0):
        with pytest.raises(DegenerateParameterError, match="degenerates"):
            classify_involutions(H, q0=q0)

    @pytest.mark.parametrize("q0", [None, 2])
    def test_families_are_consistent(self, q0):
        result = classify_involutions(H, q0=q0)
        assert result.families
        domain = sympy.QQ.frac_field(sympy.Symbol("q"))
        unknowns = [sympy.Symbol(name) for name in COEFFICIENT_NAMES]
        for family in result.families:
            if not family.residual:
                continue
            basis = sympy.groebner([sympy.sympify(eq) for eq in family.residual], *unknowns, domain=domain)
            assert list(basis.exprs) != [1], family.describe()

    def test_product_family_survives(self):
        residuals = [eq for family in classify_involutions(H).families for eq in family.residual]
        assert any("alpha1*gamma3" in eq for eq in residuals)

    def test_complex_family_recorded(self):
        result = classify_involutions(H)
        (representative,) = result.complex_families
        assert representative.name.startswith("unit-circle")
        assert check_involution(representative, H)
        assert "|alpha| = 1" in result.note
        assert result.to_dict()['note'] == result.note
        assert len(result.to_dict()['complex_families']) == 1


class TestConsistency:
    """Test cases for the unit-ideal test on leftover constraints."""

    @pytest.fixture
    def unknowns(self):
        R = compatibility_equations(H)[0].ring
        return R, dict(zip(COEFFICIENT_NAMES, R.gens))

    def test_contradictory_products(self, unknowns):
        R, x = unknowns
        q2 = R.ground_new((q * q).value)
        product = x["alpha1"] * x["gamma3"]
        assert not is_consistent([product - 1, product + q2])
        assert not is_consistent([x["alpha3"] * x["gamma1"] + 1, x["alpha3"] * x["gamma1"] - q2])

    def test_single_product_is_consistent(self, unknowns):
        R, x = unknowns
        assert is_consistent([x["alpha1"] * x["gamma3"] - 1])

    def test_empty_system(self, unknowns):
        R, _ = unknowns
        assert is_consistent([])
        assert is_consistent([R.zero])

    def test_nonzero_constant(self, unknowns):
        R, _ = unknowns
        assert not is_consistent([R.one])


class TestExtension:
    """Test cases for extending * to the quotient algebra."""

    @pytest.mark.parametrize("candidate", [minus_identity(), split_involution()])
    def test_relations_are_stable(self, candidate):
        assert check_extension_consistency(candidate, H, 5)

    def test_incompatible_candidate(self):
        with pytest.raises(InvolutionPreconditionError, match="not compatible"):
            check_extension_consistency(compact_candidate(), H, 5)


class TestEigenspaces:
    """Test cases for the odd and even parts."""

    @pytest.mark.parametrize("candidate", [minus_identity(), split_involution()])
    def test_odd_part_closed(self, candidate):
        assert check_odd_subalgebra(candidate, H)

    def test_odd_part_dimension(self):
        assert len(odd_part_basis(minus_identity())) == 3

    def test_even_witness_is_rendered(self):
        witness = even_part_witness(split_involution(), H)
        assert witness is not None
        assert all(render_cvector(z) != "0" for z in witness)

    def test_render(self):
        assert render_cvector(split_involution().image(1)) == "-v"
        assert split_involution().describe() == "u* = u, v* = -v, w* = w"
