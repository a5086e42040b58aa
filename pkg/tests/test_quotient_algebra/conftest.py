"""
Pytest configuration and fixtures for quotient_algebra tests.
"""

import os
import random
import sys

import pytest

# Add src to Python path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from quotient_algebra import AlgebraConfig


@pytest.fixture
def enveloping():
    """A_{2,q}."""
    return AlgebraConfig.enveloping(2)


@pytest.fixture
def hyperboloid():
    """A_{0,q}^5."""
    return AlgebraConfig.quotient(0, 5)


@pytest.fixture(scope="module")
def random_words():
    """100 seeded words of length 1..5 over u, v, w."""
    rng = random.Random(20240607)
    return ["".join(rng.choice("uvw") for _ in range(rng.randint(1, 5))) for _ in range(100)]
