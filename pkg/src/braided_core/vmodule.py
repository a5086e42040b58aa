"""
The 3-dimensional module V and the coproduct action on its tensor powers.
"""

import logging
from functools import lru_cache
from typing import Tuple

from qscalar import QMatrix, QScalar, q
from uq_modules import Generator, SpinModule, iterated_coproduct, rho

from .data_structures import VModule

logger = logging.getLogger(__name__)

T = q + QScalar.q_power(-1)


@lru_cache(maxsize=None)
def build_v_module() -> VModule:
    """
    Hu = 2u, Hv = 0, Hw = -2w; Xu = 0, Xv = -(q+q^-1)u, Xw = v;
    Yu = -v, Yv = (q+q^-1)w, Yw = 0.
    """
    module = SpinModule(
        l=2,
        X=QMatrix([[0, -T, 0], [0, 0, 1], [0, 0, 0]]),
        Y=QMatrix([[0, 0, 0], [-1, 0, 0], [0, T, 0]]),
        H_weights=(2, 0, -2),
        qH=QMatrix.diag([QScalar.q_power(2), 1, QScalar.q_power(-2)]),
        qH_inv=QMatrix.diag([QScalar.q_power(-2), 1, QScalar.q_power(2)]),
    )
    return VModule(module=module)


def _kron_all(factors: Tuple[QMatrix, ...]) -> QMatrix:
    result = factors[0]
    for factor in factors[1:]:
        result = result.kron(factor)
    return result


@lru_cache(maxsize=None)
def tensor_power_action(gen: Generator, factors: int) -> QMatrix:
    """Action of gen on V^{x factors} through the iterated coproduct."""
    v_module = build_v_module()
    dim = 3 ** factors
    action = QMatrix.zeros(dim, dim)
    for term in iterated_coproduct(gen, factors):
        action = action + _kron_all(tuple(rho(v_module.module, label) for label in term))
    return action
