"""
Normal-form polynomials in the PBW-type basis u^a v^b w^e.
"""

import re
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from qscalar import QScalar, ScalarParseError

from .exceptions import SerializationError

Exponents = Tuple[int, int, int]
Word = Tuple[str, ...]

LETTERS = ("u", "v", "w")

ScalarLike = Union[QScalar, int]

_KEY_PATTERN = re.compile(r"^u\^(\d+) v\^(\d+) w\^(\d+)$")


def monomial_key(exponents: Exponents) -> str:
    a, b, e = exponents
    return f"u^{a} v^{b} w^{e}"


def parse_monomial_key(key: str) -> Exponents:
    match = _KEY_PATTERN.match(key.strip())
    if not match:
        raise SerializationError(f"Invalid monomial key: {key!r}")
    return tuple(int(group) for group in match.groups())


def word_of(exponents: Exponents) -> Word:
    a, b, e = exponents
    return ("u",) * a + ("v",) * b + ("w",) * e


def exponents_of(word: Word) -> Optional[Exponents]:
    """Exponents of a word of the form u^a v^b w^e, None for any other word."""
    a = b = e = 0
    for letter in word:
        if letter == "u" and b == 0 and e == 0:
            a += 1
        elif letter == "v" and e == 0:
            b += 1
        elif letter == "w":
            e += 1
        else:
            return None
    return a, b, e


def _render_monomial(exponents: Exponents) -> str:
    parts = []
    for letter, power in zip(LETTERS, exponents):
        if power == 1:
            parts.append(letter)
        elif power > 1:
            parts.append(f"{letter}^{power}")
    return "".join(parts)


def _render_coefficient(coeff: QScalar) -> str:
    text = coeff.render()
    if " " in text:
        return f"({text})"
    return text


class NFPoly:
    """
    Finite Q(q)-linear combination of normal monomials u^a v^b w^e.

    Zero coefficients are never stored, so structural equality is equality
    of normal forms.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Exponents, ScalarLike]] = None):
        stored: Dict[Exponents, QScalar] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(int(x) for x in exponents)
            if len(exponents) != 3 or min(exponents) < 0:
                raise ValueError(f"Invalid exponents: {exponents!r}")
            coeff = QScalar(coeff)
            if not coeff.is_zero():
                stored[exponents] = coeff
        object.__setattr__(self, "_terms", stored)

    def __setattr__(self, name, value):
        raise AttributeError("NFPoly is immutable")

    @classmethod
    def zero(cls) -> "NFPoly":
        return cls()

    @classmethod
    def one(cls) -> "NFPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def monomial(cls, exponents: Exponents, coeff: ScalarLike = 1) -> "NFPoly":
        return cls({exponents: coeff})

    @property
    def terms(self) -> Dict[Exponents, QScalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponents, QScalar]]:
        return iter(self._terms.items())

    def coefficient(self, exponents: Exponents) -> QScalar:
        return self._terms.get(tuple(exponents), QScalar(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(exps) for exps in self._terms), default=-1)

    def is_quotient_normal(self) -> bool:
        """No monomial contains both u and w."""
        return all(a == 0 or e == 0 for a, _, e in self._terms)

    def _combine(self, other: "NFPoly", sign: int) -> "NFPoly":
        terms = dict(self._terms)
        for exponents, coeff in other._terms.items():
            terms[exponents] = terms.get(exponents, QScalar(0)) + coeff * sign
        return NFPoly(terms)

    def __add__(self, other: "NFPoly") -> "NFPoly":
        if not isinstance(other, NFPoly):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: "NFPoly") -> "NFPoly":
        if not isinstance(other, NFPoly):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> "NFPoly":
        return self.scale(-1)

    def scale(self, factor: ScalarLike) -> "NFPoly":
        factor = QScalar(factor)
        return NFPoly({exps: coeff * factor for exps, coeff in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NFPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def to_json(self) -> Dict[str, str]:
        return {monomial_key(exps): coeff.render() for exps, coeff in self._sorted_items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "NFPoly":
        terms: Dict[Exponents, QScalar] = {}
        for key, value in data.items():
            exponents = parse_monomial_key(key)
            try:
                terms[exponents] = QScalar.parse(str(value))
            except ScalarParseError as e:
                raise SerializationError(f"Invalid coefficient for {key}: {value!r}") from e
        return cls(terms)

    def _sorted_items(self):
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-x for x in item[0])))

    def render(self) -> str:
        """Human-readable form, e.g. q^2*uv + 4*u; highest degree first."""
        if not self._terms:
            return "0"
        pieces = []
        for exponents, coeff in self._sorted_items():
            monomial = _render_monomial(exponents)
            if not monomial:
                pieces.append(_render_coefficient(coeff))
            elif coeff == 1:
                pieces.append(monomial)
            elif coeff == -1:
                pieces.append(f"-{monomial}")
            else:
                pieces.append(f"{_render_coefficient(coeff)}*{monomial}")

        text = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                text += f" - {piece[1:]}"
            else:
                text += f" + {piece}"
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"NFPoly('{self.render()}')"
