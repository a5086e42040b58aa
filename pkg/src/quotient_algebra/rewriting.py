"""
Rewriting system for A_{h,q} and A_{h,q}^c.

Normal words are u^a v^b w^e. The defining relations are oriented as

    vu -> q^2 uv + 2h u
    wv -> q^2 vw + 2h w
    wu -> uw + ((1-q^2) v^2 - 2h v)/(q^3+q)

In quotient mode the Casimir relation (q^3+q)uw + v^2 + (q+q^-1)wu = c is
solved for uw after eliminating wu, giving uw -> f(v). Since u v = q^-2 (v-2h) u,
the rule extends to the family

    u v^b w -> q^-2b (v-2h)^b f(v),

and normal words become u^a v^b and v^b w^e.

Each rule strictly decreases (total degree, #u + #w, inversions) in the
lexicographic order, so rewriting terminates.
"""

import itertools
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from braided_core import T
from qscalar import QScalar, q

from .config import AlgebraConfig, AlgebraMode
from .data_structures import LETTERS, Exponents, NFPoly, Word, exponents_of
from .exceptions import QuotientAlgebraError, RuleDerivationError

logger = logging.getLogger(__name__)

WordPoly = Dict[Word, QScalar]
FrozenWordPoly = FrozenSet[Tuple[Word, QScalar]]

Q2 = QScalar.q_power(2)
Q3_PLUS_Q = QScalar.q_power(3) + q

PAIR_RULE_NAMES = ("vu", "wv", "wu")

# Cap on distinct normal forms tracked per word during exhaustive search.
MAX_FORMS = 64


def add_into(target: WordPoly, word: Word, coeff: QScalar) -> None:
    total = target.get(word, QScalar(0)) + coeff
    if total.is_zero():
        target.pop(word, None)
    else:
        target[word] = total


def word_poly(terms: Iterable[Tuple[str, object]]) -> WordPoly:
    """Free-algebra element from (word string, coefficient) pairs."""
    result: WordPoly = {}
    for text, coeff in terms:
        add_into(result, tuple(text), QScalar(coeff))
    return result


def termination_measure(word: Word) -> Tuple[int, int, int]:
    """(degree, #u + #w, inversions relative to u < v < w)."""
    ranks = [LETTERS.index(letter) for letter in word]
    inversions = sum(1 for i, j in itertools.combinations(range(len(ranks)), 2) if ranks[i] > ranks[j])
    return len(word), sum(1 for letter in word if letter != "v"), inversions


def defining_relations(cfg: AlgebraConfig) -> Dict[str, WordPoly]:
    """The relations generating the ideal, as elements of the free algebra."""
    two_h = QScalar(2 * cfg.h)
    relations = {
        "uv": word_poly([("uv", Q2), ("vu", -1), ("u", two_h)]),
        "uw": word_poly([("uw", Q3_PLUS_Q), ("wu", -Q3_PLUS_Q), ("vv", 1 - Q2), ("v", -two_h)]),
        "vw": word_poly([("vw", -Q2), ("wv", 1), ("w", -two_h)]),
    }
    if cfg.is_quotient:
        relations["casimir"] = word_poly([("uw", Q3_PLUS_Q), ("vv", 1), ("wu", T), ("", -cfg.c)])
    return relations


def _pair_rules(cfg: AlgebraConfig, names: Sequence[str]) -> Dict[Word, WordPoly]:
    two_h = QScalar(2 * cfg.h)
    rules = {
        "vu": word_poly([("uv", Q2), ("u", two_h)]),
        "wv": word_poly([("vw", Q2), ("w", two_h)]),
        "wu": word_poly([("uw", 1), ("vv", (1 - Q2) / Q3_PLUS_Q), ("v", -two_h / Q3_PLUS_Q)]),
    }
    unknown = set(names) - set(rules)
    if unknown:
        raise QuotientAlgebraError(f"Unknown rewrite rules: {sorted(unknown)}")
    return {tuple(name): rules[name] for name in names}


def _poly_mul(a: Dict[int, QScalar], b: Dict[int, QScalar]) -> Dict[int, QScalar]:
    result: Dict[int, QScalar] = {}
    for i, x in a.items():
        for j, y in b.items():
            result[i + j] = result.get(i + j, QScalar(0)) + x * y
    return {k: v for k, v in result.items() if not v.is_zero()}


class RewriteSystem:
    """Leftmost-first rewriting to normal form, with memoized word reduction."""

    def __init__(self, cfg: AlgebraConfig, rule_names: Sequence[str] = PAIR_RULE_NAMES):
        self.cfg = cfg
        self.logger = logging.getLogger(__name__)
        self.pair_rules = _pair_rules(cfg, rule_names)
        self.uw_elimination: Optional[Dict[int, QScalar]] = None
        self._family: Dict[int, WordPoly] = {}
        self._reduced: Dict[Word, NFPoly] = {}
        self._forms: Dict[Word, FrozenSet[FrozenWordPoly]] = {}

        if cfg.is_quotient:
            self.uw_elimination = self._derive_uw_elimination()
            self._validate_uw_elimination()

    @property
    def is_quotient(self) -> bool:
        return self.uw_elimination is not None

    def _derive_uw_elimination(self) -> Dict[int, QScalar]:
        """
        Reduce the Casimir relation with the enveloping rules; it becomes
        kappa*uw + g(v). Returns f(v) = -g(v)/kappa as power -> coefficient.
        """
        enveloping = RewriteSystem(AlgebraConfig(h=self.cfg.h, mode=AlgebraMode.ENVELOPING))
        casimir = defining_relations(self.cfg)["casimir"]
        reduced = enveloping.reduce_poly(casimir)

        kappa = reduced.coefficient((1, 0, 1))
        if kappa.is_zero():
            raise RuleDerivationError("Casimir relation has no uw term after eliminating wu")

        f: Dict[int, QScalar] = {}
        for (a, b, e), coeff in reduced.items():
            if (a, b, e) == (1, 0, 1):
                continue
            if a or e:
                raise RuleDerivationError(f"Unexpected monomial u^{a} v^{b} w^{e} in the Casimir relation")
            f[b] = -coeff / kappa
        self.logger.debug(f"Derived uw elimination for {self.cfg.describe()}: kappa = {kappa}")
        return f

    def _validate_uw_elimination(self) -> None:
        relations = defining_relations(self.cfg)
        for name in ("uw", "casimir"):
            residual = self.reduce_poly(relations[name])
            if not residual.is_zero():
                raise RuleDerivationError(f"Derived uw rule leaves residual {residual} in relation {name}")

    def family_rhs(self, b: int) -> WordPoly:
        """Right-hand side of u v^b w -> q^-2b (v-2h)^b f(v)."""
        if b not in self._family:
            poly = {0: QScalar.q_power(-2 * b)}
            shift = {1: QScalar(1), 0: QScalar(-2 * self.cfg.h)}
            for _ in range(b):
                poly = _poly_mul(poly, shift)
            poly = _poly_mul(poly, self.uw_elimination)
            self._family[b] = {("v",) * power: coeff for power, coeff in poly.items()}
        return self._family[b]

    def rules(self) -> List[Tuple[Word, WordPoly]]:
        """Pair rules, plus the b = 0 and b = 1 members of the uw family in quotient mode."""
        listed = list(self.pair_rules.items())
        if self.is_quotient:
            listed.extend((("u",) + ("v",) * b + ("w",), self.family_rhs(b)) for b in (0, 1))
        return listed

    def redexes(self, word: Word) -> List[Tuple[int, int, WordPoly]]:
        """All (start, end, rhs) rewrite sites in word, leftmost first."""
        found = []
        for i in range(len(word) - 1):
            rhs = self.pair_rules.get(word[i:i + 2])
            if rhs is not None:
                found.append((i, i + 2, rhs))
            if self.is_quotient and word[i] == "u":
                j = i + 1
                while j < len(word) and word[j] == "v":
                    j += 1
                if j < len(word) and word[j] == "w":
                    found.append((i, j + 1, self.family_rhs(j - i - 1)))
        return found

    def is_normal(self, word: Word) -> bool:
        return not self.redexes(word)

    @staticmethod
    def _substitute(word: Word, start: int, end: int, rhs: WordPoly) -> WordPoly:
        prefix, suffix = word[:start], word[end:]
        return {prefix + middle + suffix: coeff for middle, coeff in rhs.items()}

    def reduce_word(self, word: Word) -> NFPoly:
        word = tuple(word)
        cached = self._reduced.get(word)
        if cached is not None:
            return cached

        sites = self.redexes(word)
        if not sites:
            exponents = exponents_of(word)
            if exponents is None:
                raise QuotientAlgebraError(f"Irreducible word {''.join(word)!r} is not a normal monomial")
            result = NFPoly.monomial(exponents)
        else:
            start, end, rhs = sites[0]
            result = self.reduce_poly(self._substitute(word, start, end, rhs))
        self._reduced[word] = result
        return result

    def reduce_poly(self, poly: WordPoly) -> NFPoly:
        result = NFPoly.zero()
        for word, coeff in poly.items():
            result = result + self.reduce_word(word).scale(coeff)
        return result

    def normal_forms(self, word: Word) -> FrozenSet[FrozenWordPoly]:
        """
        Every irreducible form reachable from word over all rewrite orders.

        Forms are kept as frozen word polynomials so that partial rule sets,
        whose irreducible words need not be sorted, can be checked as well.
        """
        word = tuple(word)
        cached = self._forms.get(word)
        if cached is not None:
            return cached

        sites = self.redexes(word)
        if not sites:
            forms = frozenset({frozenset({(word, QScalar(1))})})
        else:
            collected = set()
            for start, end, rhs in sites:
                collected |= self._poly_forms(self._substitute(word, start, end, rhs))
                if len(collected) > MAX_FORMS:
                    break
            forms = frozenset(collected)
        self._forms[word] = forms
        return forms

    def _poly_forms(self, poly: WordPoly) -> set:
        forms = {frozenset()}
        for word, coeff in poly.items():
            combined = set()
            for partial in forms:
                for choice in self.normal_forms(word):
                    total = dict(partial)
                    for irreducible, value in choice:
                        add_into(total, irreducible, value * coeff)
                    combined.add(frozenset(total.items()))
            forms = combined
            if len(forms) > MAX_FORMS:
                break
        return forms

    def check_confluence(self, max_len: int) -> bool:
        """Exhaustive check that every word of length <= max_len has one normal form."""
        if max_len < 3:
            raise QuotientAlgebraError(f"max_len must be at least 3, got {max_len}")
        for length in range(max_len + 1):
            for word in itertools.product(LETTERS, repeat=length):
                forms = self.normal_forms(word)
                if len(forms) != 1:
                    self.logger.info(f"Ambiguous word {''.join(word)!r}: {len(forms)} normal forms")
                    return False
        return True

    def check_termination_order(self) -> bool:
        """Every right-hand side word is below its left-hand side in the termination order."""
        return all(
            termination_measure(rhs_word) < termination_measure(lhs)
            for lhs, rhs in self.rules()
            for rhs_word in rhs
        )

    def normal_monomials(self, degree: int) -> List[Exponents]:
        """Exponent triples of irreducible words of the given total degree."""
        monomials = []
        for a in range(degree + 1):
            for b in range(degree - a + 1):
                e = degree - a - b
                if self.is_normal(("u",) * a + ("v",) * b + ("w",) * e):
                    monomials.append((a, b, e))
        return monomials
