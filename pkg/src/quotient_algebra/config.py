"""
Configuration for the algebras A_{h,q} and A_{h,q}^c.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from qscalar import QScalar

ScalarInput = Union[QScalar, int, Fraction, str]


class AlgebraMode(Enum):
    """Which algebra normal forms live in."""
    ENVELOPING = "enveloping"   # A_{h,q}
    QUOTIENT = "quotient"       # A_{h,q}^c = A_{h,q}/(C_q - c)


@dataclass(frozen=True)
class AlgebraConfig:
    """Parameters of the algebra. c may depend on q (e.g. c = c_k)."""

    h: Fraction = Fraction(0)
    c: QScalar = QScalar(0)
    mode: AlgebraMode = AlgebraMode.ENVELOPING

    def __post_init__(self):
        try:
            object.__setattr__(self, 'h', Fraction(self.h))
        except (TypeError, ValueError) as e:
            raise ValueError(f"h must be rational, got {self.h!r}") from e

        c = self.c
        if isinstance(c, str):
            c = QScalar.parse(c)
        if not isinstance(c, (QScalar, int, Fraction)):
            raise ValueError(f"c must be a scalar, got {c!r}")
        object.__setattr__(self, 'c', QScalar(c))

        if not isinstance(self.mode, AlgebraMode):
            try:
                object.__setattr__(self, 'mode', AlgebraMode(self.mode))
            except ValueError as e:
                raise ValueError(f"Invalid algebra mode: {self.mode!r}") from e

    @property
    def is_quotient(self) -> bool:
        return self.mode is AlgebraMode.QUOTIENT

    @classmethod
    def enveloping(cls, h=0) -> 'AlgebraConfig':
        return cls(h=h, mode=AlgebraMode.ENVELOPING)

    @classmethod
    def quotient(cls, h=0, c=0) -> 'AlgebraConfig':
        return cls(h=h, c=c, mode=AlgebraMode.QUOTIENT)

    @classmethod
    def create_default(cls) -> 'AlgebraConfig':
        return cls()

    def describe(self) -> str:
        if self.is_quotient:
            return f"A_(h={self.h},q)^(c={self.c})"
        return f"A_(h={self.h},q)"
