"""
Tests for the command-line entry point: subcommand output and exit codes.
"""

import importlib
import json

import pytest

from hyperboloid_cli.data_models import ClaimModel, ClaimStatus, ReportModel
from hyperboloid_cli.main import EXIT_OK, EXIT_PARAMETER_ERROR, EXIT_VERIFICATION_FAILED, build_parser, main
from qscalar import QScalar, q

# The package re-exports main(), which shadows the submodule attribute.
cli = importlib.import_module("hyperboloid_cli.main")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRep:
    """Test cases for the rep subcommand."""

    def test_spin_half(self, capsys):
        code, out, _ = run(capsys, "rep", "--l", "1", "--h", "2")
        assert code == EXIT_OK
        assert "theta = q^3 + q^-1" in out
        assert "[pass] rep.theta_formula: theta = q^3 + q^-1" in out
        assert "U =" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "rep", "--l", "1", "--h", "2", "--format", "json")
        assert code == EXIT_OK
        report = ReportModel.model_validate_json(out)
        assert report.scalar("theta") == q ** 3 + QScalar.q_power(-1)
        assert set(report.matrices) >= {"U", "V", "W", "U_rescaled"}

    def test_numeric(self, capsys):
        code, out, _ = run(capsys, "rep", "--l", "1", "--h", "2", "--q", "1", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["scalars"]["theta"] == "2"

    def test_zero_l(self, capsys):
        code, _, err = run(capsys, "rep", "--l", "0", "--h", "2")
        assert code == EXIT_PARAMETER_ERROR
        assert "l >= 1" in err

    def test_zero_h(self, capsys):
        code, _, err = run(capsys, "rep", "--l", "1", "--h", "0")
        assert code == EXIT_PARAMETER_ERROR
        assert "h != 0" in err

    def test_missing_flag(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["rep", "--l", "1"])
        assert exc_info.value.code == 2


class TestCasimir:
    """Test cases for the casimir subcommand."""

    def test_classical_values(self, capsys):
        code, out, _ = run(capsys, "casimir", "--lmax", "3", "--h", "2", "--q", "1")
        assert code == EXIT_OK
        for l, value in ((1, 12), (2, 32), (3, 60)):
            assert f"c_k[l={l}] = {value}" in out

    def test_symbolic_casimir(self, capsys):
        _, out, _ = run(capsys, "casimir", "--lmax", "1", "--h", "1")
        assert "casimir[l=1] = q^2 + 1 + q^-2" in out

    def test_zero_lmax(self, capsys):
        code, _, _ = run(capsys, "casimir", "--lmax", "0", "--h", "2")
        assert code == EXIT_PARAMETER_ERROR


class TestTrace:
    """Test cases for the trace subcommand."""

    def test_sphere_average(self, capsys):
        code, out, _ = run(capsys, "trace", "--m", "2", "--c", "5", "--q", "1")
        assert code == EXIT_OK
        assert "trace = 5/3" in out
        assert "trace.convention" in out

    def test_degree_bound_below_m(self, capsys):
        code, _, err = run(capsys, "trace", "--m", "3", "--c", "5", "--d", "2")
        assert code == EXIT_PARAMETER_ERROR
        assert "below m=3" in err

    def test_invalid_c(self, capsys):
        code, _, err = run(capsys, "trace", "--m", "2", "--c", "q^^")
        assert code == EXIT_PARAMETER_ERROR
        assert "Invalid value for c" in err

    def test_zero_q(self, capsys):
        code, _, _ = run(capsys, "trace", "--m", "2", "--c", "5", "--q", "0")
        assert code == EXIT_PARAMETER_ERROR


class TestReduce:
    """Test cases for the reduce subcommand."""

    def test_enveloping(self, capsys):
        code, out, _ = run(capsys, "reduce", "--word", "vu", "--mode", "enveloping", "--h", "2")
        assert code == EXIT_OK
        assert "[info] reduce.normal_form: q^2*uv + 4*u" in out
        assert "u^1 v^1 w^0 = q^2" in out

    def test_json_keys(self, capsys):
        _, out, _ = run(capsys, "reduce", "--word", "vu", "--h", "2", "--format", "json")
        assert json.loads(out)["scalars"] == {"u^1 v^1 w^0": "q^2", "u^1 v^0 w^0": "4"}

    def test_quotient(self, capsys):
        code, out, _ = run(capsys, "reduce", "--word", "uw", "--mode", "quotient", "--c", "5", "--q", "1")
        assert code == EXIT_OK
        assert "u^0 v^0 w^0 = 5/4" in out

    def test_invalid_letter(self, capsys):
        code, _, err = run(capsys, "reduce", "--word", "vx")
        assert code == EXIT_PARAMETER_ERROR
        assert "Words are over" in err


class TestVerifyExitCodes:
    """Test cases for verify exit codes, with the suite runner mocked."""

    def test_failure_exits_one(self, capsys, mocker):
        mocker.patch.object(cli, "cmd_verify", return_value=ReportModel(claims=[
            ClaimModel(id="reps.theta", status=ClaimStatus.PASS),
            ClaimModel(id="trace.values", status=ClaimStatus.FAIL, note="mismatch"),
        ]))
        code, out, _ = run(capsys, "verify", "--suite", "trace")
        assert code == EXIT_VERIFICATION_FAILED
        assert "[fail] trace.values: mismatch" in out
        assert "1 pass, 1 fail, 0 paper-discrepancy, 0 info" in out

    def test_discrepancy_exits_zero(self, capsys, mocker):
        verify = mocker.patch.object(cli, "cmd_verify", return_value=ReportModel(claims=[
            ClaimModel(id="reps.golden_l2", status=ClaimStatus.PAPER_DISCREPANCY, note="W carries T"),
        ]))
        code, _, _ = run(capsys, "verify", "--suite", "reps", "--jobs", "2", "--lmax", "2")
        assert code == EXIT_OK
        suite, settings, jobs = verify.call_args.args
        assert (suite, jobs) == ("reps", 2)
        assert settings.verification.lmax == 2

    def test_q_samples_flag(self, capsys, mocker):
        verify = mocker.patch.object(cli, "cmd_verify", return_value=ReportModel())
        run(capsys, "verify", "--q-samples", "2, 5/3")
        assert verify.call_args.args[1].sampling.q_samples == ["2", "5/3"]

    def test_missing_config(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", "--config", str(tmp_path / "absent.yaml"))
        assert code == EXIT_PARAMETER_ERROR
        assert "not found" in err

    def test_unknown_suite(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["verify", "--suite", "everything"])
