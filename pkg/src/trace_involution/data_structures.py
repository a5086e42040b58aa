"""
Data structures for braided traces, quantum traces and involutions.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from qscalar import CScalar, QMatrix, QScalar
from quotient_algebra import AlgebraConfig, LETTERS, NFPoly
from quotient_algebra.data_structures import Exponents
from uq_modules import Generator

CVector = Tuple[CScalar, CScalar, CScalar]


class ExponentSign(Enum):
    """Sign s in the factor q^{s m} c^{s m/2} of the closed trace formula."""
    PLUS = "+"
    MINUS = "-"


class QTraceConvention(Enum):
    """Twist used in Tr_q(M) = Tr(M rho(K))."""
    Q_H = "q^H"
    Q_MINUS_H = "q^-H"


@dataclass(frozen=True)
class InvariantProjector:
    """
    Invariant functional on the degree <= d part of A_{0,q}^c.

    complement is spanned by the images X.b, Y.b, H.b of the basis; the
    functional kills it and takes the value 1 on the unit.
    """

    d: int
    cfg: AlgebraConfig
    basis: Tuple[Exponents, ...]
    actions: Dict[Generator, QMatrix]
    complement: QMatrix
    functional: Tuple[QScalar, ...]
    q0: Optional[Fraction] = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, exponents: Exponents) -> int:
        return self.basis.index(tuple(exponents))

    def coordinates(self, x: NFPoly) -> List[QScalar]:
        vector = [QScalar(0)] * self.dim
        for exponents, coeff in x.items():
            vector[self.index(exponents)] = coeff
        return vector


@dataclass(frozen=True)
class TraceComparison:
    """Projection value of tr(v^m) against both sign conventions of the closed formula."""

    m: int
    c: QScalar
    projection: QScalar
    formula_plus: QScalar
    formula_minus: Optional[QScalar]
    q0: Optional[Fraction] = None

    @property
    def matches_plus(self) -> bool:
        return self.projection == self.formula_plus

    @property
    def matches_minus(self) -> bool:
        return self.formula_minus is not None and self.projection == self.formula_minus

    @property
    def matching_convention(self) -> Optional[ExponentSign]:
        if self.matches_plus:
            return ExponentSign.PLUS
        if self.matches_minus:
            return ExponentSign.MINUS
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'm': self.m,
            'c': str(self.c),
            'q0': None if self.q0 is None else str(self.q0),
            'projection': str(self.projection),
            'formula_plus': str(self.formula_plus),
            'formula_minus': None if self.formula_minus is None else str(self.formula_minus),
            'matches_plus': self.matches_plus,
            'matches_minus': self.matches_minus,
        }


def render_cvector(vector: Sequence[CScalar]) -> str:
    parts = []
    for letter, coeff in zip(LETTERS, vector):
        if coeff.is_zero():
            continue
        text = str(coeff)
        if text == "1":
            parts.append(letter)
        elif text == "-1":
            parts.append(f"-{letter}")
        else:
            parts.append(f"({text})*{letter}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class InvolutionCandidate:
    """
    Antilinear map z -> z* on span{u, v, w}, (lambda z)* = conj(lambda) z*.

    Column j of J is the image of the j-th basis vector:
    u* = J[0][0] u + J[1][0] v + J[2][0] w.
    """

    J: Tuple[Tuple[CScalar, ...], ...]
    name: str = ""

    def __post_init__(self):
        try:
            rows = tuple(tuple(CScalar.of(entry) for entry in row) for row in self.J)
        except TypeError as e:
            raise ValueError(f"Invalid involution entry: {e}") from e
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("An involution candidate needs a 3x3 matrix")
        object.__setattr__(self, 'J', rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], name: str = "") -> 'InvolutionCandidate':
        return cls(J=tuple(tuple(row) for row in rows), name=name)

    @classmethod
    def diagonal(cls, entries: Sequence[Any], name: str = "") -> 'InvolutionCandidate':
        zero = CScalar()
        rows = [[entries[i] if i == j else zero for j in range(3)] for i in range(3)]
        return cls.from_rows(rows, name)

    def image(self, j: int) -> CVector:
        return tuple(self.J[i][j] for i in range(3))

    def apply(self, vector: Sequence[Any]) -> CVector:
        """(sum lambda_j e_j)* = sum conj(lambda_j) e_j*."""
        result = [CScalar()] * 3
        for j, coeff in enumerate(vector):
            coeff = CScalar.of(coeff).conj()
            if coeff.is_zero():
                continue
            for i in range(3):
                result[i] = result[i] + self.J[i][j] * coeff
        return tuple(result)

    def real_part(self) -> QMatrix:
        return QMatrix([[entry.re for entry in row] for row in self.J])

    def imaginary_part(self) -> QMatrix:
        return QMatrix([[entry.im for entry in row] for row in self.J])

    def is_involutive(self) -> bool:
        """J conj(J) = id, i.e. (z*)* = z."""
        for i in range(3):
            for k in range(3):
                total = CScalar()
                for j in range(3):
                    total = total + self.J[i][j] * self.J[j][k].conj()
                if total != CScalar(1 if i == k else 0):
                    return False
        return True

    def describe(self) -> str:
        return ", ".join(f"{letter}* = {render_cvector(self.image(j))}" for j, letter in enumerate(LETTERS))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'J': [[str(entry) for entry in row] for row in self.J],
            'images': self.describe(),
        }


@dataclass(frozen=True)
class SolutionBranch:
    """
    One branch of the compatibility system: entries of J as expressions in the
    remaining free coefficients, plus the equations left unsolved.
    """

    entries: Tuple[Tuple[str, ...], ...]
    free: Tuple[str, ...] = ()
    residual: Tuple[str, ...] = ()
    candidate: Optional[InvolutionCandidate] = None

    @property
    def is_point(self) -> bool:
        return self.candidate is not None

    def describe(self) -> str:
        if self.candidate is not None:
            return self.candidate.describe()
        constraints = ", ".join(f"{eq} = 0" for eq in self.residual) or "none"
        return f"J = {[list(row) for row in self.entries]} with constraints {constraints}"


@dataclass
class InvolutionClassification:
    """
    Real involutions found, the families left before imposing involutivity,
    and compatible involutions that need complex coefficients.
    """

    h: Fraction
    candidates: List[InvolutionCandidate] = field(default_factory=list)
    families: List[SolutionBranch] = field(default_factory=list)
    complex_families: List[InvolutionCandidate] = field(default_factory=list)
    note: str = ""
    q0: Optional[Fraction] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'h': str(self.h),
            'q0': None if self.q0 is None else str(self.q0),
            'candidates': [candidate.to_dict() for candidate in self.candidates],
            'families': [family.describe() for family in self.families],
            'complex_families': [candidate.to_dict() for candidate in self.complex_families],
            'note': self.note,
        }
