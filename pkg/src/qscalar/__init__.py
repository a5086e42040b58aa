"""
Exact Scalars over Q(q)

This package provides exact arithmetic in the rational function field Q(q),
its complexification as pairs of real parts, and dense matrices over Q(q)
with exact rank, nullspace and inverse computations.
"""

from .scalar import (
    ArithOp,
    QF,
    QScalar,
    RationalLike,
    arith,
    canonicalize,
    eval_at,
    q,
    qint,
)
from .complex_scalar import CScalar
from .matrix import QMatrix
from .exceptions import (
    QScalarError,
    ScalarDivisionError,
    PoleError,
    ZeroPointError,
    ScalarParseError,
    MatrixShapeError,
    SingularMatrixError,
)

__version__ = "1.0.0"

__all__ = [
    # Scalars
    'QF',
    'QScalar',
    'CScalar',
    'RationalLike',
    'ArithOp',
    'q',
    'qint',
    'arith',
    'eval_at',
    'canonicalize',

    # Matrices
    'QMatrix',

    # Exceptions
    'QScalarError',
    'ScalarDivisionError',
    'PoleError',
    'ZeroPointError',
    'ScalarParseError',
    'MatrixShapeError',
    'SingularMatrixError',
]
