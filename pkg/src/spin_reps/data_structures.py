"""
Data structures for spin-k almost representations.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple

from qscalar import QMatrix, QScalar
from uq_modules import EndoElement


@dataclass(frozen=True)
class BraidedRep:
    """
    The triple (U, V, W) in End(U_k) with its factor theta = 2h*nu.

    rescale = 2h/theta turns the triple into a genuine representation of
    A_{h,q}, on which the braided Casimir acts by c_k = casimir_scalar*rescale^2.
    """

    l: int
    h: Fraction
    U: EndoElement
    V: EndoElement
    W: EndoElement
    theta: QScalar
    nu: QScalar
    casimir_scalar: QScalar
    rescale: QScalar

    @property
    def c_k(self) -> QScalar:
        return self.casimir_scalar * self.rescale * self.rescale

    def rescaled(self) -> Tuple[QMatrix, QMatrix, QMatrix]:
        return tuple(M.matrix.scale(self.rescale) for M in (self.U, self.V, self.W))

    def matrices(self) -> Dict[str, QMatrix]:
        rU, rV, rW = self.rescaled()
        return {
            'U': self.U.matrix,
            'V': self.V.matrix,
            'W': self.W.matrix,
            'U_rescaled': rU,
            'V_rescaled': rV,
            'W_rescaled': rW,
        }

    def scalars(self) -> Dict[str, QScalar]:
        return {
            'theta': self.theta,
            'nu': self.nu,
            'casimir': self.casimir_scalar,
            'rescale': self.rescale,
            'c_k': self.c_k,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            'l': self.l,
            'h': str(self.h),
            'matrices': {name: m.to_strings() for name, m in self.matrices().items()},
            'scalars': {name: str(value) for name, value in self.scalars().items()},
        }
