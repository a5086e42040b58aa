"""
Tests for the U_q(sl(2)) action on the algebras, braided commutativity,
representation consistency and the normal-form serialization.
"""

from fractions import Fraction

import pytest

from qscalar import QScalar, q, qint
from quotient_algebra import (
    AlgebraConfig,
    AlgebraMode,
    NFPoly,
    QuotientAlgebraError,
    SerializationError,
    WellDefinednessError,
    braided_commutativity_failures,
    check_action_well_defined,
    check_braided_commutativity,
    monomial_key,
    parse_monomial_key,
    reduce,
    rep_consistency,
    require_action_well_defined,
    rewrite_system,
    uq_act,
)
from spin_reps import build_braided_rep
from uq_modules import Generator


class TestUqAction:
    """Test cases for the module-algebra action."""

    def test_on_generators(self, enveloping):
        u = reduce("u", enveloping)
        assert uq_act(Generator.X, u, enveloping).is_zero()
        assert uq_act(Generator.Y, u, enveloping) == NFPoly.monomial((0, 1, 0), -1)

    def test_weight_of_product(self, enveloping):
        uv = reduce("uv", enveloping)
        assert uq_act(Generator.H, uv, enveloping) == uv.scale(2)

    def test_action_descends(self, enveloping):
        assert check_action_well_defined(enveloping)
        assert check_action_well_defined(AlgebraConfig.quotient(2, 5))
        require_action_well_defined(enveloping)

    @pytest.mark.parametrize("cfg", [AlgebraConfig.enveloping(2), AlgebraConfig.quotient(2, 5)],
                             ids=["enveloping", "quotient"])
    def test_relations_up_to_degree_three(self, cfg):
        def act(gen, x):
            return uq_act(gen, x, cfg)

        X, Y, H = Generator.X, Generator.Y, Generator.H
        for d in range(4):
            for exponents in rewrite_system(cfg).normal_monomials(d):
                x = NFPoly.monomial(exponents)
                weight = 2 * (exponents[0] - exponents[2])
                assert act(H, x) == x.scale(weight)
                assert act(H, act(X, x)) - act(X, act(H, x)) == act(X, x).scale(2)
                assert act(H, act(Y, x)) - act(Y, act(H, x)) == act(Y, x).scale(-2)
                assert act(X, act(Y, x)) - act(Y, act(X, x)) == x.scale(qint(weight))


class TestBraidedCommutativity:
    """Test cases for mu S = mu on V x V."""

    @pytest.mark.parametrize("c", [0, 1, 5])
    def test_holds_for_zero_h(self, c):
        assert check_braided_commutativity(c)

    def test_fails_for_nonzero_h(self):
        assert braided_commutativity_failures(5, 2)


class TestRepConsistency:
    """Test cases for the rescaled triple as a representation of the algebra."""

    @pytest.mark.parametrize("word", ["vu", "wvu", "uwvw", "wwuu"])
    def test_enveloping(self, word):
        rep = build_braided_rep(1, 2)
        assert rep_consistency(rep, word, AlgebraConfig.enveloping(2))

    @pytest.mark.parametrize("word", ["uw", "wvu", "vvuw"])
    def test_quotient_at_module_value(self, word):
        rep = build_braided_rep(2, 2)
        assert rep_consistency(rep, word, AlgebraConfig.quotient(2, rep.c_k))

    @pytest.mark.parametrize("l", [1, 2])
    def test_random_words_enveloping(self, l, random_words):
        rep = build_braided_rep(l, 2)
        cfg = AlgebraConfig.enveloping(2)
        assert [word for word in random_words if not rep_consistency(rep, word, cfg)] == []

    @pytest.mark.parametrize("l", [1, 2])
    def test_random_words_quotient(self, l, random_words):
        rep = build_braided_rep(l, 2)
        cfg = AlgebraConfig.quotient(2, rep.c_k)
        assert [word for word in random_words if not rep_consistency(rep, word, cfg)] == []

    def test_mismatched_h(self):
        with pytest.raises(QuotientAlgebraError, match="does not match"):
            rep_consistency(build_braided_rep(1, 2), "uv", AlgebraConfig.enveloping(1))

    def test_mismatched_c(self):
        with pytest.raises(QuotientAlgebraError, match="c_k"):
            rep_consistency(build_braided_rep(1, 2), "uv", AlgebraConfig.quotient(2, 5))


class TestSerialization:
    """Test cases for monomial keys and the JSON form of normal forms."""

    def test_to_json(self, enveloping):
        assert reduce("vu", enveloping).to_json() == {"u^1 v^1 w^0": "q^2", "u^1 v^0 w^0": "4"}

    def test_from_json(self, enveloping):
        x = reduce("wu", enveloping)
        assert NFPoly.from_json(x.to_json()) == x

    def test_keys(self):
        assert monomial_key((2, 0, 1)) == "u^2 v^0 w^1"
        assert parse_monomial_key("u^2 v^0 w^1") == (2, 0, 1)

    def test_invalid_key(self):
        with pytest.raises(SerializationError, match="Invalid monomial key"):
            NFPoly.from_json({"uv": "1"})

    def test_invalid_coefficient(self):
        with pytest.raises(SerializationError, match="Invalid coefficient"):
            NFPoly.from_json({"u^1 v^0 w^0": "q^^"})

    def test_immutable(self):
        with pytest.raises(AttributeError, match="immutable"):
            NFPoly.one().extra = 1


class TestAlgebraConfig:
    """Test cases for AlgebraConfig."""

    def test_defaults(self):
        cfg = AlgebraConfig.create_default()
        assert cfg.h == 0
        assert cfg.mode is AlgebraMode.ENVELOPING
        assert not cfg.is_quotient

    def test_coercion(self):
        cfg = AlgebraConfig(h="7/3", c="q + 1", mode="quotient")
        assert cfg.h == Fraction(7, 3)
        assert cfg.c == q + 1
        assert cfg.is_quotient

    def test_invalid_mode(self):
        with pytest.raises(ValueError, match="Invalid algebra mode"):
            AlgebraConfig(mode="free")

    def test_invalid_h(self):
        with pytest.raises(ValueError, match="h must be rational"):
            AlgebraConfig(h="q")

    def test_describe(self):
        assert AlgebraConfig.quotient(0, 5).describe() == "A_(h=0,q)^(c=5)"
