"""
Pytest configuration and fixtures for trace_involution tests.
"""

import os
import sys
from fractions import Fraction

import pytest

# Add src to Python path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))


@pytest.fixture
def c():
    """Casimir value of the hyperboloid x^2 + y^2 + z^2 = 5."""
    return Fraction(5)
