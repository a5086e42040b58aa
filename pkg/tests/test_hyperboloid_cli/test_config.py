"""
Tests for the layered configuration and the report models.
"""

import importlib
import json

import pytest
from pydantic import ValidationError

from hyperboloid_cli.config import (
    DOTENV_AVAILABLE,
    HyperboloidConfig,
    OutputConfig,
    RunConfig,
    VerificationConfig,
)
from hyperboloid_cli.data_models import ClaimModel, ClaimStatus, ReportModel
from qscalar import QMatrix, q

config_module = importlib.import_module("hyperboloid_cli.config")


class TestHyperboloidConfig:
    """Test cases for HyperboloidConfig."""

    def test_defaults(self, settings):
        assert settings.verification.lmax == 8
        assert settings.sampling.seed == 20240607
        assert settings.output.format == "text"

    def test_repo_yaml_matches_defaults(self, repo_config_path, settings):
        assert HyperboloidConfig.from_yaml(repo_config_path) == settings

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError, match="not found"):
            HyperboloidConfig.from_yaml(str(tmp_path / "missing.yaml"))

    def test_partial_yaml(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("hyperboloid:\n  verification:\n    lmax: 2\n  output:\n    log_level: info\n")
        config = HyperboloidConfig.from_yaml(str(path))
        assert config.verification.lmax == 2
        assert config.output.log_level == "INFO"
        assert config.sampling.random_words == 100

    def test_empty_document(self):
        assert HyperboloidConfig.from_dict(None) == HyperboloidConfig.create_default()

    def test_invalid_values(self):
        with pytest.raises(ValueError, match="lmax"):
            VerificationConfig(lmax=0)
        with pytest.raises(ValueError, match="Invalid log level"):
            OutputConfig(log_level="LOUD")
        with pytest.raises(ValueError, match="involution_h"):
            VerificationConfig(involution_h="0")


class TestEnvironment:
    """Test cases for HYPERBOLOID_* overrides."""

    def test_overrides(self, clean_environment):
        clean_environment.setenv("HYPERBOLOID_LOG_LEVEL", "debug")
        clean_environment.setenv("HYPERBOLOID_JOBS", "3")
        config = HyperboloidConfig.from_environment()
        assert config.output.log_level == "DEBUG"
        assert config.output.jobs == 3

    def test_invalid_override(self, clean_environment):
        clean_environment.setenv("HYPERBOLOID_JOBS", "0")
        with pytest.raises(ValueError, match="HYPERBOLOID_"):
            HyperboloidConfig.from_environment()

    @pytest.mark.skipif(not DOTENV_AVAILABLE, reason="python-dotenv is not installed")
    def test_env_file(self, clean_environment, tmp_path):
        env_file = tmp_path / ".env"
        env_file.write_text("HYPERBOLOID_LMAX=2\n")
        config = HyperboloidConfig.from_environment(env_file_path=str(env_file))
        assert config.verification.lmax == 2

    def test_env_file_ignored_without_dotenv(self, clean_environment, tmp_path, mocker, settings):
        mocker.patch.object(config_module, "DOTENV_AVAILABLE", False)
        env_file = tmp_path / ".env"
        env_file.write_text("HYPERBOLOID_LMAX=2\n")
        config = HyperboloidConfig.from_environment(env_file_path=str(env_file))
        assert config.verification.lmax == settings.verification.lmax


class TestRunConfig:
    """Test cases for RunConfig validation."""

    def test_numeric(self):
        assert RunConfig(subcommand="rep", q0="1/2").numeric
        assert not RunConfig(subcommand="rep").numeric

    def test_zero_q0(self):
        with pytest.raises(ValueError, match="q0 must be nonzero"):
            RunConfig(subcommand="rep", q0=0)

    def test_invalid_suite(self):
        with pytest.raises(ValueError, match="Invalid suite"):
            RunConfig(subcommand="verify", suite="everything")


class TestReportModel:
    """Test cases for the JSON report schema."""

    def test_round_trip(self):
        report = ReportModel()
        report.add_matrix("U", QMatrix([[0, q], [0, 0]]))
        report.add_scalar("theta", q ** 3 + q ** -1)
        report.claims.append(ClaimModel(id="rep.theta", status=ClaimStatus.PASS))
        restored = ReportModel.model_validate_json(report.model_dump_json())
        assert restored.matrix("U") == QMatrix([[0, q], [0, 0]])
        assert restored.scalar("theta") == q ** 3 + q ** -1
        assert json.loads(report.model_dump_json())["claims"][0]["status"] == "pass"

    def test_non_scalar_entry(self):
        report = ReportModel(scalars={"word": "uv??"})
        assert report.scalar("word") is None

    def test_ragged_matrix(self):
        with pytest.raises(ValidationError, match="rows of different lengths"):
            ReportModel(matrices={"U": [["0", "1"], ["0"]]})

    def test_extra_fields(self):
        with pytest.raises(ValidationError):
            ClaimModel(id="x", status="pass", severity="high")

    def test_exit_code(self):
        report = ReportModel(claims=[
            ClaimModel(id="a", status=ClaimStatus.PAPER_DISCREPANCY),
            ClaimModel(id="b", status=ClaimStatus.INFO),
        ])
        assert report.exit_code == 0
        report.claims.append(ClaimModel(id="c", status="fail", note="boom"))
        assert report.exit_code == 1
        assert [claim.id for claim in report.failed] == ["c"]
