"""
The three almost-representation relations for a triple of matrices.

For images (U, V, W) of (u, v, w) and a factor theta:

    q^2 UV - VU = -theta U
    (q^3+q)(UW - WU) + (1-q^2) V^2 = theta V
    -q^2 VW + WV = theta W

theta = 2h gives the defining relations of A_{h,q}; theta = 2h*nu is an
almost representation with factor nu.
"""

from typing import Dict, Optional

from qscalar import QMatrix, QScalar, q

Q2 = QScalar.q_power(2)
Q3_PLUS_Q = QScalar.q_power(3) + q


def relation_lhs(U: QMatrix, V: QMatrix, W: QMatrix) -> Dict[str, QMatrix]:
    """Quadratic left-hand sides of the three relations."""
    return {
        'uv': (U @ V).scale(Q2) - V @ U,
        'uw': (U @ W - W @ U).scale(Q3_PLUS_Q) + (V @ V).scale(1 - Q2),
        'vw': -(V @ W).scale(Q2) + W @ V,
    }


def definition_residuals(U: QMatrix, V: QMatrix, W: QMatrix, theta: QScalar) -> Dict[str, QMatrix]:
    lhs = relation_lhs(U, V, W)
    return {
        'uv': lhs['uv'] + U.scale(theta),
        'uw': lhs['uw'] - V.scale(theta),
        'vw': lhs['vw'] - W.scale(theta),
    }


def holds_with_factor(U: QMatrix, V: QMatrix, W: QMatrix, theta: QScalar) -> bool:
    return all(residual.is_zero() for residual in definition_residuals(U, V, W, theta).values())


def extract_factor(U: QMatrix, V: QMatrix) -> Optional[QScalar]:
    """theta read off the first nonzero entry of U in q^2 UV - VU = -theta U."""
    lhs = (U @ V).scale(Q2) - V @ U
    for i, row in enumerate(U.rows()):
        for j, entry in enumerate(row):
            if not entry.is_zero():
                return -lhs[i, j] / entry
    return None
