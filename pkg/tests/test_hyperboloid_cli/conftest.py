"""
Pytest configuration and fixtures for hyperboloid_cli tests.
"""

import os
import sys

import pytest

# Add src to Python path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from hyperboloid_cli.config import HyperboloidConfig

REPO_CONFIG = os.path.join(os.path.dirname(__file__), '..', '..', 'config', 'hyperboloid_config.yaml')


@pytest.fixture
def settings():
    return HyperboloidConfig.create_default()


@pytest.fixture
def repo_config_path():
    return REPO_CONFIG


@pytest.fixture
def clean_environment(monkeypatch):
    """Remove HYPERBOLOID_* overrides; values loaded from .env files are undone at teardown."""
    for name in ("HYPERBOLOID_LOG_LEVEL", "HYPERBOLOID_JOBS", "HYPERBOLOID_LMAX"):
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    return monkeypatch
