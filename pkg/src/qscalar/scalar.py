"""
Exact elements of the rational function field Q(q).

QScalar wraps an element of sympy's fraction field QQ(q). sympy keeps every
element reduced: numerator and denominator are coprime integer polynomials
and the denominator has a positive leading coefficient. Structural equality
is therefore equality of rational functions.
"""

import logging
from enum import Enum
from fractions import Fraction
from tokenize import TokenError
from typing import Dict, List, Tuple, Union

from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field

from .exceptions import (
    PoleError,
    ScalarDivisionError,
    ScalarParseError,
    ZeroPointError,
)

logger = logging.getLogger(__name__)

FIELD, _Q_GEN = field("q", QQ)
QF = FIELD.to_domain()

RationalLike = Union[int, Fraction]

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _domain_to_fraction(value) -> Fraction:
    expr = QQ.to_sympy(value)
    return Fraction(int(expr.p), int(expr.q))


def _evaluate_poly(poly, q0: Fraction) -> Fraction:
    total = Fraction(0)
    for (exponent,), coeff in poly.terms():
        total += _domain_to_fraction(coeff) * q0 ** exponent
    return total


def _poly_terms(poly) -> List[Tuple[int, Fraction]]:
    return [(exponent, _domain_to_fraction(coeff)) for (exponent,), coeff in poly.terms()]


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _render_laurent(terms: List[Tuple[int, Fraction]]) -> str:
    """Render (exponent, coefficient) pairs in descending powers of q."""
    pieces = []
    for exponent, coeff in sorted(terms, key=lambda t: -t[0]):
        if coeff == 0:
            continue
        magnitude = abs(coeff)
        if exponent == 0:
            body = _format_fraction(magnitude)
        else:
            power = "q" if exponent == 1 else f"q^{exponent}"
            body = power if magnitude == 1 else f"{_format_fraction(magnitude)}*{power}"
        pieces.append(("-" if coeff < 0 else "+", body))

    if not pieces:
        return "0"

    sign, body = pieces[0]
    text = f"-{body}" if sign == "-" else body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


class QScalar:
    """Immutable element of Q(q)."""

    __slots__ = ("_value",)

    def __init__(self, value: Union["QScalar", RationalLike, object] = 0):
        if isinstance(value, QScalar):
            element = value._value
        elif isinstance(value, Fraction):
            element = FIELD(QQ(value.numerator, value.denominator))
        elif isinstance(value, int):
            element = FIELD(int(value))
        elif isinstance(value, FracElement) and value.field == FIELD:
            element = value
        else:
            raise TypeError(f"Cannot build QScalar from {type(value).__name__}")
        object.__setattr__(self, "_value", element)

    def __setattr__(self, name, value):
        raise AttributeError("QScalar is immutable")

    @property
    def value(self):
        """Underlying sympy fraction field element."""
        return self._value

    @property
    def numerator(self):
        return self._value.numer

    @property
    def denominator(self):
        return self._value.denom

    @classmethod
    def gen(cls) -> "QScalar":
        return cls(_Q_GEN)

    @classmethod
    def q_power(cls, exponent: int) -> "QScalar":
        return cls(_Q_GEN ** exponent)

    @classmethod
    def from_laurent(cls, coefficients: Dict[int, RationalLike]) -> "QScalar":
        """Build sum(c * q^k) from an exponent to coefficient mapping."""
        result = cls(0)
        for exponent, coeff in coefficients.items():
            result = result + cls.q_power(exponent) * coeff
        return result

    @classmethod
    def parse(cls, text: str) -> "QScalar":
        """Parse the rendering grammar, e.g. "q^2 + 1 + q^-2" or "(q^2 + 1)/(q^4 + 1)"."""
        if not isinstance(text, str) or not text.strip():
            raise ScalarParseError(f"Cannot parse empty scalar: {text!r}")
        try:
            expr = parse_expr(
                text,
                local_dict={"q": FIELD.symbols[0]},
                transformations=_TRANSFORMATIONS,
            )
            return cls(FIELD.from_expr(expr))
        except (SympifyError, SyntaxError, TokenError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ScalarParseError(f"Cannot parse scalar {text!r}: {e}") from e

    @staticmethod
    def _coerce(other):
        if isinstance(other, QScalar):
            return other._value
        if isinstance(other, (int, Fraction)):
            return QScalar(other)._value
        return None

    def __add__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return QScalar(self._value + value)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return QScalar(self._value - value)

    def __rsub__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return QScalar(value - self._value)

    def __mul__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return QScalar(self._value * value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        if not value:
            raise ScalarDivisionError(f"Division of {self} by zero in Q(q)")
        return QScalar(self._value / value)

    def __rtruediv__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        if not self._value:
            raise ScalarDivisionError("Division by zero in Q(q)")
        return QScalar(value / self._value)

    def __neg__(self):
        return QScalar(-self._value)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0 and not self._value:
            raise ScalarDivisionError("Negative power of zero in Q(q)")
        return QScalar(self._value ** exponent)

    def __eq__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._value == value

    def __hash__(self):
        return hash(self._value)

    def __bool__(self):
        return bool(self._value)

    def is_zero(self) -> bool:
        return not self._value

    def is_constant(self) -> bool:
        """True when the scalar does not depend on q."""
        return self._value.numer.is_ground and self._value.denom.is_ground

    def to_fraction(self) -> Fraction:
        """Exact rational value of a constant scalar."""
        if not self.is_constant():
            raise ValueError(f"{self} depends on q")
        if not self._value.numer:
            return Fraction(0)
        return _domain_to_fraction(self._value.numer.LC) / _domain_to_fraction(self._value.denom.LC)

    def inverse(self) -> "QScalar":
        return QScalar(1) / self

    def conj(self) -> "QScalar":
        """Complex conjugate; q is real, so this is the identity."""
        return self

    def eval_at(self, q0: RationalLike) -> Fraction:
        """Exact rational value at q = q0."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ZeroPointError(f"Cannot evaluate {self} at q = 0")
        denominator = _evaluate_poly(self._value.denom, q0)
        if denominator == 0:
            raise PoleError(f"{self} has a pole at q = {_format_fraction(q0)}")
        return _evaluate_poly(self._value.numer, q0) / denominator

    def render(self) -> str:
        numer, denom = self._value.numer, self._value.denom
        if not numer:
            return "0"
        denom_terms = _poly_terms(denom)
        if len(denom_terms) == 1:
            shift, scale = denom_terms[0]
            return _render_laurent(
                [(exponent - shift, coeff / scale) for exponent, coeff in _poly_terms(numer)]
            )
        return f"({_render_laurent(_poly_terms(numer))})/({_render_laurent(denom_terms)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QScalar('{self.render()}')"


q = QScalar.gen()


class ArithOp(Enum):
    """Field operations exposed by arith."""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def arith(a: QScalar, b: QScalar, op: ArithOp) -> QScalar:
    """Canonical result of a field operation."""
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    if op is ArithOp.MUL:
        return a * b
    if op is ArithOp.DIV:
        return a / b
    raise ValueError(f"Unknown operation: {op}")


def qint(i: int) -> QScalar:
    """The q-integer b_i = (q^i - q^-i)/(q - q^-1)."""
    return (QScalar.q_power(i) - QScalar.q_power(-i)) / (q - QScalar.q_power(-1))


def eval_at(a: QScalar, q0: RationalLike) -> Fraction:
    return a.eval_at(q0)


def canonicalize(a: QScalar) -> QScalar:
    """Rebuild a scalar from its numerator and denominator."""
    return QScalar(FIELD(a.numerator)) / QScalar(FIELD(a.denominator))
