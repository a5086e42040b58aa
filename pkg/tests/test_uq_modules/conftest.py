"""
Pytest configuration and fixtures for uq_modules tests.
"""

import os
import sys

import pytest

# Add src to Python path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from qscalar import QMatrix
from uq_modules import EndoElement, build_spin_module


@pytest.fixture
def spin_half():
    return build_spin_module(1)


@pytest.fixture
def spin_one():
    return build_spin_module(2)


@pytest.fixture
def raising_l1():
    """U = [[0, 1], [0, 0]] in End(U_1/2)."""
    return EndoElement(1, QMatrix([[0, 1], [0, 0]]))
