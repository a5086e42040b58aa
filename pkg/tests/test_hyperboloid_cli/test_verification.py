"""
Tests for the verify suites and the claim runner.
"""

from hyperboloid_cli import verification
from hyperboloid_cli.data_models import ClaimStatus
from hyperboloid_cli.verification import (
    SUITE_CLAIMS,
    claim_classification,
    claim_golden_l1,
    claim_golden_l2,
    cmd_verify,
    run_claim,
    suite_claims,
)


def _passing(settings):
    return ClaimStatus.PASS, "ok"


def _raising(settings):
    raise RuntimeError("exploded")


class TestSuites:
    """Test cases for suite registration."""

    def test_all_is_concatenation(self):
        ids = [claim_id for claim_id, _ in suite_claims("all")]
        assert ids == [claim_id for claims in SUITE_CLAIMS.values() for claim_id, _ in claims]
        assert len(ids) == len(set(ids))

    def test_ids_are_prefixed_by_suite(self):
        for suite, claims in SUITE_CLAIMS.items():
            assert all(claim_id.startswith(f"{suite}.") for claim_id, _ in claims)


class TestClaimRunner:
    """Test cases for run_claim and cmd_verify."""

    def test_exception_becomes_failure(self, settings):
        claim = run_claim("x.boom", _raising, settings)
        assert claim.status is ClaimStatus.FAIL
        assert claim.note == "RuntimeError: exploded"

    def test_order_kept_with_workers(self, settings, mocker):
        claims = [(f"fake.c{i}", _raising if i == 3 else _passing) for i in range(8)]
        mocker.patch.dict(verification.SUITE_CLAIMS, {"trace": claims})
        report = cmd_verify("trace", settings, jobs=4)
        assert [claim.id for claim in report.claims] == [claim_id for claim_id, _ in claims]
        assert [claim.id for claim in report.failed] == ["fake.c3"]


class TestGoldenClaims:
    """Test cases for the explicit l = 1 and l = 2 claims."""

    def test_spin_half_passes(self, settings):
        status, _ = claim_golden_l1(settings)
        assert status is ClaimStatus.PASS

    def test_spin_one_lowering_discrepancy(self, settings):
        status, _ = claim_golden_l2(settings)
        assert status is ClaimStatus.PAPER_DISCREPANCY


class TestInvolutionClaims:
    """Test cases for the involution classification claim."""

    def test_classification_reports_complex_family(self, settings):
        status, note = claim_classification(settings)
        assert status is ClaimStatus.PASS
        assert "2 real involutions found" in note
        assert "|alpha| = 1" in note


class TestFullRun:
    """Test cases for the complete suite with the default ranges."""

    def test_all_claims(self, settings):
        assert settings.verification.lmax == 8
        report = cmd_verify("all", settings, jobs=1)
        by_id = {claim.id: claim for claim in report.claims}

        assert [claim.id for claim in report.failed] == []
        assert sorted(
            claim_id for claim_id, claim in by_id.items()
            if claim.status is ClaimStatus.PAPER_DISCREPANCY
        ) == ["reps.golden_l2", "trace.formula_m2", "trace.formula_m4"]
        assert by_id["reps.uq_relations"].note == "l = 0..8"
        assert by_id["reps.theta"].note.endswith("l = 1..8")
        assert by_id["reps.casimir"].status is ClaimStatus.PASS
        assert by_id["involutions.even_witness"].status is ClaimStatus.INFO
        assert report.exit_code == 0
