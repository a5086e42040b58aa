"""
Spin-k representations of U_q(sl(2)).

rho(X) is the superdiagonal of ones, rho(H) = diag(l, l-2, ..., -l) and
rho(Y) is the subdiagonal solving [X, Y] = (q^H - q^-H)/(q - q^-1).
"""

import logging
from typing import Dict, List

from qscalar import QMatrix, QScalar, q, qint

from .data_structures import SpinModule
from .exceptions import InvalidModuleError

logger = logging.getLogger(__name__)


def spin_weights(l: int) -> List[int]:
    return [l - 2 * i for i in range(l + 1)]


def y_entries(l: int) -> List[QScalar]:
    """y_j = b_l + b_{l-2} + ... + b_{l-2(j-1)} for j = 1..l."""
    entries = []
    running = QScalar(0)
    for j in range(l):
        running = running + qint(l - 2 * j)
        entries.append(running)
    return entries


def build_spin_module(l: int) -> SpinModule:
    """Build the (l+1)-dimensional irreducible module."""
    if not isinstance(l, int) or l < 0:
        raise InvalidModuleError(f"l must be a nonnegative integer, got {l!r}")

    weights = spin_weights(l)
    module = SpinModule(
        l=l,
        X=QMatrix.superdiag([1] * l),
        Y=QMatrix.subdiag(y_entries(l)),
        H_weights=tuple(weights),
        qH=QMatrix.diag([QScalar.q_power(w) for w in weights]),
        qH_inv=QMatrix.diag([QScalar.q_power(-w) for w in weights]),
    )
    logger.debug(f"Built spin module l={l} with y entries {[str(y) for y in module.y_entries()]}")
    return module


def relation_residuals(m: SpinModule) -> Dict[str, QMatrix]:
    """Left minus right side of each U_q(sl(2)) relation."""
    X, Y, H = m.X, m.Y, m.H
    cartan = (m.qH - m.qH_inv).scale(QScalar(1) / (q - QScalar.q_power(-1)))
    return {
        '[H,X]=2X': H @ X - X @ H - X.scale(2),
        '[H,Y]=-2Y': H @ Y - Y @ H + Y.scale(2),
        '[X,Y]=[H]_q': X @ Y - Y @ X - cartan,
    }


def check_uq_relations(m: SpinModule) -> bool:
    """True iff the three defining relations hold exactly."""
    failed = [name for name, residual in relation_residuals(m).items() if not residual.is_zero()]
    if failed:
        logger.info(f"Spin module l={m.l} violates {failed}")
        return False
    return True
