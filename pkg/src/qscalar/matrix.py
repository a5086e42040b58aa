"""
Dense matrices over Q(q).

QMatrix wraps sympy's DomainMatrix over the fraction field QQ(q); products,
row reduction and inversion are delegated to it. Entries are exposed as
QScalar values.
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .exceptions import MatrixShapeError, SingularMatrixError
from .scalar import FIELD, QF, QScalar, RationalLike

logger = logging.getLogger(__name__)

ScalarLike = Union[QScalar, RationalLike]


class QMatrix:
    """Immutable dense matrix with QScalar entries."""

    __slots__ = ("_dm",)

    def __init__(self, rows: Sequence[Sequence[ScalarLike]]):
        rows = [list(row) for row in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if nrows == 0 or ncols == 0:
            raise MatrixShapeError("QMatrix needs at least one row and one column")
        if any(len(row) != ncols for row in rows):
            raise MatrixShapeError("Ragged rows in QMatrix")
        elements = [[QScalar(entry).value for entry in row] for row in rows]
        object.__setattr__(self, "_dm", DomainMatrix(elements, (nrows, ncols), QF))

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def _wrap(cls, dm: DomainMatrix) -> "QMatrix":
        matrix = cls.__new__(cls)
        object.__setattr__(matrix, "_dm", dm.to_dense())
        return matrix

    # Constructors

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "QMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence[ScalarLike]) -> "QMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def superdiag(cls, entries: Sequence[ScalarLike]) -> "QMatrix":
        """Square matrix with entries[i] at position (i, i+1)."""
        n = len(entries) + 1
        return cls([[entries[i] if j == i + 1 else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def subdiag(cls, entries: Sequence[ScalarLike]) -> "QMatrix":
        """Square matrix with entries[i] at position (i+1, i)."""
        n = len(entries) + 1
        return cls([[entries[j] if i == j + 1 else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, entries: Sequence[ScalarLike]) -> "QMatrix":
        return cls([[entry] for entry in entries])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]]) -> "QMatrix":
        if not columns:
            raise MatrixShapeError("No columns given")
        nrows = len(columns[0])
        return cls([[column[i] for column in columns] for i in range(nrows)])

    @classmethod
    def from_strings(cls, grid: Sequence[Sequence[str]]) -> "QMatrix":
        return cls([[QScalar.parse(entry) for entry in row] for row in grid])

    # Access

    @property
    def shape(self) -> Tuple[int, int]:
        return self._dm.shape

    @property
    def nrows(self) -> int:
        return self._dm.shape[0]

    @property
    def ncols(self) -> int:
        return self._dm.shape[1]

    def rows(self) -> List[List[QScalar]]:
        return [[QScalar(entry) for entry in row] for row in self._dm.to_list()]

    def columns(self) -> List[List[QScalar]]:
        return self.transpose().rows()

    def entries(self) -> List[QScalar]:
        """Row-major flattening."""
        return [entry for row in self.rows() for entry in row]

    def __getitem__(self, index: Tuple[int, int]) -> QScalar:
        i, j = index
        return QScalar(self._dm.to_list()[i][j])

    def to_strings(self) -> List[List[str]]:
        return [[str(entry) for entry in row] for row in self.rows()]

    # Arithmetic

    def _check_same_shape(self, other: "QMatrix") -> None:
        if self.shape != other.shape:
            raise MatrixShapeError(f"Shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return QMatrix._wrap(self._dm + other._dm)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return QMatrix._wrap(self._dm - other._dm)

    def __neg__(self) -> "QMatrix":
        return QMatrix._wrap(-self._dm)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise MatrixShapeError(f"Cannot multiply {self.shape} by {other.shape}")
        return QMatrix._wrap(self._dm.matmul(other._dm))

    def scale(self, factor: ScalarLike) -> "QMatrix":
        factor = QScalar(factor)
        return QMatrix([[entry * factor for entry in row] for row in self.rows()])

    def __mul__(self, factor):
        if isinstance(factor, (QScalar, int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QMatrix":
        if self.nrows != self.ncols:
            raise MatrixShapeError("Only square matrices have powers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QMatrix.identity(self.nrows)
        for _ in range(exponent):
            result = result @ self
        return result

    def transpose(self) -> "QMatrix":
        return QMatrix._wrap(self._dm.transpose())

    def kron(self, other: "QMatrix") -> "QMatrix":
        """Kronecker product; row index of the result is i*other.nrows + k."""
        left, right = self.rows(), other.rows()
        rows = []
        for left_row in left:
            for right_row in right:
                rows.append([a * b for a in left_row for b in right_row])
        return QMatrix(rows)

    def hstack(self, *others: "QMatrix") -> "QMatrix":
        blocks = [self, *others]
        if any(block.nrows != self.nrows for block in blocks):
            raise MatrixShapeError("hstack needs equal row counts")
        rows = [list(row) for row in self.rows()]
        for block in others:
            for row, extra in zip(rows, block.rows()):
                row.extend(extra)
        return QMatrix(rows)

    def vstack(self, *others: "QMatrix") -> "QMatrix":
        blocks = [self, *others]
        if any(block.ncols != self.ncols for block in blocks):
            raise MatrixShapeError("vstack needs equal column counts")
        return QMatrix([row for block in blocks for row in block.rows()])

    def submatrix(self, row_indices: Iterable[int], col_indices: Iterable[int]) -> "QMatrix":
        rows = self.rows()
        col_indices = list(col_indices)
        return QMatrix([[rows[i][j] for j in col_indices] for i in row_indices])

    def trace(self) -> QScalar:
        total = QScalar(0)
        for i, row in enumerate(self.rows()):
            total = total + row[i]
        return total

    # Exact linear algebra

    def rref(self) -> Tuple["QMatrix", Tuple[int, ...]]:
        reduced, pivots = self._dm.rref()
        return QMatrix._wrap(reduced), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> List[List[QScalar]]:
        """Basis of {x : self @ x = 0}, one vector per free column."""
        reduced, pivots = self.rref()
        rows = reduced.rows()
        basis = []
        for free in range(self.ncols):
            if free in pivots:
                continue
            vector = [QScalar(0)] * self.ncols
            vector[free] = QScalar(1)
            for row_index, pivot in enumerate(pivots):
                vector[pivot] = -rows[row_index][free]
            basis.append(vector)
        return basis

    def left_nullspace(self) -> List[List[QScalar]]:
        return self.transpose().nullspace()

    def solve(self, rhs: Sequence[ScalarLike]) -> Optional[List[QScalar]]:
        """One solution of self @ x = rhs, or None when inconsistent."""
        augmented = self.hstack(QMatrix.column(rhs))
        reduced, pivots = augmented.rref()
        if self.ncols in pivots:
            return None
        rows = reduced.rows()
        solution = [QScalar(0)] * self.ncols
        for row_index, pivot in enumerate(pivots):
            solution[pivot] = rows[row_index][self.ncols]
        return solution

    def inverse(self) -> "QMatrix":
        if self.nrows != self.ncols:
            raise MatrixShapeError("Only square matrices are invertible")
        try:
            return QMatrix._wrap(self._dm.inv())
        except DMNonInvertibleMatrixError as e:
            raise SingularMatrixError("Matrix is singular over Q(q)") from e

    # Predicates

    def is_zero(self) -> bool:
        return all(entry.is_zero() for entry in self.entries())

    def scalar_value(self) -> Optional[QScalar]:
        """The constant c when self == c * identity, else None."""
        if self.nrows != self.ncols:
            return None
        rows = self.rows()
        value = rows[0][0]
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                expected = value if i == j else 0
                if entry != expected:
                    return None
        return value

    def eval_at(self, q0: RationalLike) -> "QMatrix":
        """Entrywise evaluation at q = q0, as a matrix of constants."""
        return QMatrix([[entry.eval_at(q0) for entry in row] for row in self.rows()])

    def rank_at(self, q0: RationalLike) -> int:
        return self.eval_at(q0).rank()

    def denominators(self) -> Set[QScalar]:
        """Distinct non-constant denominators among the entries."""
        found = set()
        for entry in self.entries():
            den = entry.denominator
            if not den.is_ground:
                found.add(QScalar(FIELD(den)))
        return found

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._dm.to_list() == other._dm.to_list()

    __hash__ = None

    def __repr__(self):
        return f"QMatrix({self.to_strings()})"
