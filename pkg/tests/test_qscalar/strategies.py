"""
Hypothesis strategies for scalars over Q(q).
"""

from fractions import Fraction

from hypothesis import strategies as st

from qscalar import QScalar


def laurent_polynomials(max_terms: int = 4):
    """Small Laurent polynomials sum(c_k q^k), k in [-3, 3], |c_k| <= 5."""
    return st.dictionaries(
        st.integers(min_value=-3, max_value=3),
        st.integers(min_value=-5, max_value=5),
        max_size=max_terms,
    ).map(QScalar.from_laurent)


def nonzero_laurent_polynomials(max_terms: int = 4):
    return laurent_polynomials(max_terms).filter(lambda x: not x.is_zero())


def rational_functions():
    """Quotients of small Laurent polynomials."""
    return st.tuples(laurent_polynomials(), nonzero_laurent_polynomials()).map(lambda pair: pair[0] / pair[1])


def sample_points():
    """Nonzero rational q values."""
    return st.sampled_from([Fraction(2), Fraction(3), Fraction(1, 2), Fraction(-2), Fraction(5, 3)])
