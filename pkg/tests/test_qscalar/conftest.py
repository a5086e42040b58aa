"""
Pytest configuration and fixtures for qscalar tests.
"""

import os
import sys

import pytest

# Add src to Python path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from qscalar import QMatrix, QScalar


@pytest.fixture
def b2():
    """The q-integer b_2 = q + q^-1."""
    return QScalar.parse("q + q^-1")


@pytest.fixture
def singular_matrix():
    """Rank-one 2x2 matrix over Q(q)."""
    q = QScalar.gen()
    return QMatrix([[1, q], [q, q * q]])
