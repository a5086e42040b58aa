"""
Data structures for the braided sl(2) core: the module V, its tensor square,
the q-Lie bracket and the generalized Lie structure.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from qscalar import QMatrix, QScalar
from uq_modules import Generator, SpinModule

VVector = Tuple[QScalar, QScalar, QScalar]

V_LABELS = ("u", "v", "w")
TENSOR_LABELS = tuple(a + b for a in V_LABELS for b in V_LABELS)


@dataclass(frozen=True)
class VModule:
    """The 3-dimensional module span{u, v, w}; basis index 0, 1, 2."""

    module: SpinModule
    labels: Tuple[str, ...] = V_LABELS

    @property
    def X(self) -> QMatrix:
        return self.module.X

    @property
    def Y(self) -> QMatrix:
        return self.module.Y

    @property
    def H(self) -> QMatrix:
        return self.module.H

    def matrix(self, gen: Generator) -> QMatrix:
        return self.module.matrix(gen)

    def weight(self, label: str) -> int:
        return self.module.H_weights[self.labels.index(label)]

    def action_on(self, gen: Generator, label: str) -> Dict[str, QScalar]:
        """Image of a basis vector as a label to coefficient mapping."""
        column = self.labels.index(label)
        matrix = self.matrix(gen)
        return {
            self.labels[row]: matrix[row, column]
            for row in range(3)
            if not matrix[row, column].is_zero()
        }


@dataclass(frozen=True)
class TensorSquare:
    """V x V = V_0 + V_1 + V_2 with ordered basis uu, uv, ..., ww."""

    spans: Dict[int, Tuple[Tuple[QScalar, ...], ...]]
    basis_change: QMatrix
    projectors: Tuple[QMatrix, QMatrix, QMatrix]
    labels: Tuple[str, ...] = TENSOR_LABELS

    @property
    def dims(self) -> Tuple[int, int, int]:
        return tuple(len(self.spans[spin]) for spin in (0, 1, 2))

    def projector(self, spin: int) -> QMatrix:
        return self.projectors[spin]


@dataclass(frozen=True)
class QLieBracket:
    """Structure constants [e_i, e_j] for the configured h."""

    h: Fraction
    M: QScalar
    table: Dict[Tuple[int, int], VVector]

    def bracket_basis(self, i: int, j: int) -> VVector:
        return self.table[(i, j)]


@dataclass(frozen=True)
class GenLieData:
    """alpha: V x V -> V and beta: V x V -> scalars, both vanishing off I = V_1 + V_0."""

    h: Fraction
    c: Fraction
    alpha: QMatrix
    beta: QMatrix


@dataclass
class GenLieReport:
    """Outcome of the generalized Lie structure check."""

    h: Fraction
    c: Fraction
    dim_K: int
    condition_a: bool
    condition_b: bool
    condition_c: bool
    classical_dim_K: Optional[int] = None
    q0: Optional[Fraction] = None

    @property
    def all_hold(self) -> bool:
        return self.condition_a and self.condition_b and self.condition_c

    def to_dict(self) -> Dict[str, Any]:
        return {
            'h': str(self.h),
            'c': str(self.c),
            'dim_K': self.dim_K,
            'classical_dim_K': self.classical_dim_K,
            'condition_a': self.condition_a,
            'condition_b': self.condition_b,
            'condition_c': self.condition_c,
            'q0': None if self.q0 is None else str(self.q0),
        }


@dataclass
class AlmostJacobiResult:
    """Common factor nu of the left-adjoint almost representation, if any."""

    h: Fraction
    nu: Optional[QScalar]
    failing_relations: List[str] = field(default_factory=list)
    rescaled_is_representation: bool = False

    @property
    def found(self) -> bool:
        return self.nu is not None and not self.failing_relations

    @property
    def lie_normalized_nu(self) -> Optional[QScalar]:
        """2*nu: the factor measured against the bracket rather than the algebra relations."""
        return None if self.nu is None else self.nu * 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            'h': str(self.h),
            'nu': None if self.nu is None else str(self.nu),
            'lie_normalized_nu': None if self.nu is None else str(self.lie_normalized_nu),
            'failing_relations': list(self.failing_relations),
            'rescaled_is_representation': self.rescaled_is_representation,
        }
