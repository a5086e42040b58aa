"""
Pytest configuration and fixtures for spin_reps tests.
"""

import os
import sys

import pytest

# Add src to Python path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from spin_reps import build_braided_rep


@pytest.fixture
def rep_l1():
    return build_braided_rep(1, 2)


@pytest.fixture
def rep_l2():
    return build_braided_rep(2, 2)
