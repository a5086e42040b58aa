"""
Data structures for spin modules of U_q(sl(2)) and their endomorphisms.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

from qscalar import QMatrix, QScalar

from .exceptions import DimensionMismatchError


class Generator(Enum):
    """Generators of U_q(sl(2)) acting on modules."""
    X = "X"
    Y = "Y"
    H = "H"


@dataclass(frozen=True)
class SpinModule:
    """
    The spin-k irreducible module, l = 2k, of dimension l + 1.

    q^H and q^-H are stored explicitly: they are not polynomials in H.
    """

    l: int
    X: QMatrix
    Y: QMatrix
    H_weights: Tuple[int, ...]
    qH: QMatrix
    qH_inv: QMatrix

    @property
    def dim(self) -> int:
        return self.l + 1

    @property
    def H(self) -> QMatrix:
        return QMatrix.diag(list(self.H_weights))

    def matrix(self, gen: Generator) -> QMatrix:
        if gen is Generator.X:
            return self.X
        if gen is Generator.Y:
            return self.Y
        return self.H

    def y_entries(self) -> Tuple[QScalar, ...]:
        """Subdiagonal entries y_1, ..., y_l of rho(Y)."""
        return tuple(self.Y[j + 1, j] for j in range(self.l))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'l': self.l,
            'X': self.X.to_strings(),
            'Y': self.Y.to_strings(),
            'H_weights': list(self.H_weights),
        }


@dataclass(frozen=True)
class EndoElement:
    """An endomorphism of the spin module U_k, tagged with l."""

    l: int
    matrix: QMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.l + 1, self.l + 1):
            raise DimensionMismatchError(
                f"Endomorphism of shape {self.matrix.shape} does not act on a module with l={self.l}"
            )

    def __matmul__(self, other: "EndoElement") -> "EndoElement":
        _require_same_module(self, other)
        return EndoElement(self.l, self.matrix @ other.matrix)

    def __add__(self, other: "EndoElement") -> "EndoElement":
        _require_same_module(self, other)
        return EndoElement(self.l, self.matrix + other.matrix)

    def __sub__(self, other: "EndoElement") -> "EndoElement":
        _require_same_module(self, other)
        return EndoElement(self.l, self.matrix - other.matrix)

    def scale(self, factor) -> "EndoElement":
        return EndoElement(self.l, self.matrix.scale(factor))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def _require_same_module(a: EndoElement, b: EndoElement) -> None:
    if a.l != b.l:
        raise DimensionMismatchError(f"Endomorphisms of different modules: l={a.l} and l={b.l}")
