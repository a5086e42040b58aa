"""
Complexified scalars: pairs re + i*im of elements of Q(q).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple, Union

from .scalar import QScalar, RationalLike


@dataclass(frozen=True)
class CScalar:
    """re + i*im with re, im in Q(q). q is real, so conj only negates im."""

    re: QScalar = field(default_factory=QScalar)
    im: QScalar = field(default_factory=QScalar)

    def __post_init__(self):
        object.__setattr__(self, "re", QScalar(self.re))
        object.__setattr__(self, "im", QScalar(self.im))

    @classmethod
    def i(cls) -> "CScalar":
        return cls(QScalar(0), QScalar(1))

    @classmethod
    def of(cls, value) -> "CScalar":
        """Coerce a real or complex scalar."""
        coerced = cls._coerce(value)
        if coerced is None:
            raise TypeError(f"Cannot build CScalar from {type(value).__name__}")
        return coerced

    @staticmethod
    def _coerce(other) -> Union["CScalar", None]:
        if isinstance(other, CScalar):
            return other
        if isinstance(other, (QScalar, int, Fraction)):
            return CScalar(QScalar(other), QScalar(0))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.norm()
        product = self * other.conj()
        return CScalar(product.re / norm, product.im / norm)

    def __neg__(self):
        return CScalar(-self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conj(self) -> "CScalar":
        return CScalar(self.re, -self.im)

    def norm(self) -> QScalar:
        """re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self

    def is_real(self) -> bool:
        return self.im.is_zero()

    def eval_at(self, q0: RationalLike) -> Tuple[Fraction, Fraction]:
        return self.re.eval_at(q0), self.im.eval_at(q0)

    def __str__(self):
        if self.im.is_zero():
            return str(self.re)
        imaginary = "i" if self.im == 1 else f"i*({self.im})"
        if self.re.is_zero():
            return imaginary
        return f"{self.re} + {imaginary}"
