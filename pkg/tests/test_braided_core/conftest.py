"""
Pytest configuration and fixtures for braided_core tests.
"""

import os
import sys
from fractions import Fraction

import pytest

# Add src to Python path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from braided_core import decompose_tensor_square


@pytest.fixture(scope="module")
def tensor_square():
    return decompose_tensor_square()


@pytest.fixture
def h():
    return Fraction(2)
