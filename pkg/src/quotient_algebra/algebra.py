"""
Normal-form arithmetic, flatness checks and the U_q(sl(2)) action on
A_{h,q} and A_{h,q}^c.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Union

from braided_core import T, TENSOR_LABELS, braiding_operator, build_v_module
from qscalar import QMatrix, QScalar, RationalLike
from spin_reps import BraidedRep
from uq_modules import Generator, iterated_coproduct, rho

from .config import AlgebraConfig
from .data_structures import LETTERS, NFPoly, Word, word_of
from .exceptions import QuotientAlgebraError, WellDefinednessError
from .rewriting import Q3_PLUS_Q, RewriteSystem, WordPoly, add_into, defining_relations

logger = logging.getLogger(__name__)

WordLike = Union[str, Sequence[str]]


@lru_cache(maxsize=None)
def rewrite_system(cfg: AlgebraConfig) -> RewriteSystem:
    """Shared rewrite system per configuration; the uw rule is derived once."""
    logger.debug(f"Building rewrite system for {cfg.describe()}")
    return RewriteSystem(cfg)


def parse_word(word: WordLike) -> Word:
    letters = tuple(word)
    invalid = [letter for letter in letters if letter not in LETTERS]
    if invalid:
        raise QuotientAlgebraError(f"Words are over u, v, w; got {invalid!r}")
    return letters


def reduce(word: WordLike, cfg: AlgebraConfig) -> NFPoly:
    """Normal form of a word."""
    return rewrite_system(cfg).reduce_word(parse_word(word))


def reduce_poly(poly: WordPoly, cfg: AlgebraConfig) -> NFPoly:
    return rewrite_system(cfg).reduce_poly(poly)


def to_word_poly(x: NFPoly) -> WordPoly:
    return {word_of(exponents): coeff for exponents, coeff in x.items()}


def multiply(x: NFPoly, y: NFPoly, cfg: AlgebraConfig) -> NFPoly:
    """Concatenate-and-reduce, extended bilinearly."""
    product: WordPoly = {}
    for ex, cx in x.items():
        for ey, cy in y.items():
            add_into(product, word_of(ex) + word_of(ey), cx * cy)
    return reduce_poly(product, cfg)


def check_confluence(cfg: AlgebraConfig, max_len: int = 3) -> bool:
    result = rewrite_system(cfg).check_confluence(max_len)
    logger.info(f"Confluence of {cfg.describe()} up to length {max_len}: {result}")
    return result


def graded_dimension(cfg: AlgebraConfig, d: int) -> int:
    """Number of normal monomials of total degree exactly d."""
    if d < 0:
        raise QuotientAlgebraError(f"Degree must be nonnegative, got {d}")
    return len(rewrite_system(cfg).normal_monomials(d))


def classical_dimension(cfg: AlgebraConfig, d: int) -> int:
    """Graded dimension at q = 1, h = 0: polynomials in 3 variables, or the hyperboloid."""
    if cfg.is_quotient:
        return 1 if d == 0 else 2 * d + 1
    return (d + 1) * (d + 2) // 2


def _letter_image(label: str, letter: str) -> Dict[str, QScalar]:
    """Image of a basis letter under a coproduct factor (X, Y, H, K, K^-1 or 1)."""
    module = build_v_module().module
    matrix = rho(module, label)
    column = LETTERS.index(letter)
    return {
        LETTERS[row]: matrix[row, column]
        for row in range(3)
        if not matrix[row, column].is_zero()
    }


def act_on_word(gen: Generator, word: WordLike) -> WordPoly:
    """Action of gen on a tensor word in the free algebra via the iterated coproduct."""
    word = parse_word(word)
    result: WordPoly = {}
    for term in iterated_coproduct(gen, len(word)):
        partial: WordPoly = {(): QScalar(1)}
        for label, letter in zip(term, word):
            image = _letter_image(label, letter)
            partial = {
                prefix + (new_letter,): coeff * value
                for prefix, coeff in partial.items()
                for new_letter, value in image.items()
            }
        for new_word, coeff in partial.items():
            add_into(result, new_word, coeff)
    return result


def act_on_poly(gen: Generator, poly: WordPoly) -> WordPoly:
    result: WordPoly = {}
    for word, coeff in poly.items():
        for new_word, value in act_on_word(gen, word).items():
            add_into(result, new_word, coeff * value)
    return result


def uq_act(gen: Generator, x: NFPoly, cfg: AlgebraConfig) -> NFPoly:
    """Act on the normal-word representative of x, then reduce."""
    return reduce_poly(act_on_poly(gen, to_word_poly(x)), cfg)


def action_residuals(cfg: AlgebraConfig) -> Dict[str, NFPoly]:
    """Normal forms of gen applied to each defining relation; all vanish iff the action descends."""
    residuals = {}
    for name, relation in defining_relations(cfg).items():
        for gen in Generator:
            residuals[f"{gen.value}.{name}"] = reduce_poly(act_on_poly(gen, relation), cfg)
    return residuals


def check_action_well_defined(cfg: AlgebraConfig) -> bool:
    failing = [name for name, residual in action_residuals(cfg).items() if not residual.is_zero()]
    if failing:
        logger.warning(f"U_q action does not preserve the ideal of {cfg.describe()}: {failing}")
    return not failing


def require_action_well_defined(cfg: AlgebraConfig) -> None:
    if not check_action_well_defined(cfg):
        raise WellDefinednessError(f"U_q action is not well defined on {cfg.describe()}")


def braided_commutativity_failures(c: Union[QScalar, RationalLike], h: RationalLike = 0) -> List[str]:
    """Basis tensors t with mu(t) != mu(S t) in A_{h,q}^c."""
    cfg = AlgebraConfig.quotient(h=h, c=QScalar(c))
    S = braiding_operator()
    failing = []
    for i, label in enumerate(TENSOR_LABELS):
        braided: WordPoly = {}
        for j, image_label in enumerate(TENSOR_LABELS):
            if not S[j, i].is_zero():
                add_into(braided, tuple(image_label), S[j, i])
        if reduce(label, cfg) != reduce_poly(braided, cfg):
            failing.append(label)
    return failing


def check_braided_commutativity(c: Union[QScalar, RationalLike], h: RationalLike = 0) -> bool:
    """mu S = mu on V x V inside A_{h,q}^c; expected exactly when h = 0."""
    failing = braided_commutativity_failures(c, h)
    if failing:
        logger.info(f"Braided commutativity fails for h={h}, c={c} on {failing}")
    return not failing


def casimir_word_poly() -> WordPoly:
    """The free-algebra representative (q^3+q)uw + v^2 + (q+q^-1)wu of C_q."""
    return {
        ("u", "w"): Q3_PLUS_Q,
        ("v", "v"): QScalar(1),
        ("w", "u"): T,
    }


def casimir_centrality_residuals(cfg: AlgebraConfig) -> Dict[str, NFPoly]:
    """C_q z - z C_q in normal form for z in {u, v, w}."""
    casimir = reduce_poly(casimir_word_poly(), cfg)
    residuals = {}
    for letter in LETTERS:
        z = reduce(letter, cfg)
        residuals[letter] = multiply(casimir, z, cfg) - multiply(z, casimir, cfg)
    return residuals


def word_matrix(word: WordLike, matrices: Dict[str, QMatrix], dim: int) -> QMatrix:
    result = QMatrix.identity(dim)
    for letter in parse_word(word):
        result = result @ matrices[letter]
    return result


def nfpoly_matrix(x: NFPoly, matrices: Dict[str, QMatrix], dim: int) -> QMatrix:
    result = QMatrix.zeros(dim, dim)
    for exponents, coeff in x.items():
        result = result + word_matrix(word_of(exponents), matrices, dim).scale(coeff)
    return result


def rep_consistency(rep: BraidedRep, word: WordLike, cfg: AlgebraConfig) -> bool:
    """The rescaled triple represents reduce(word) by the product along the word."""
    if cfg.h != rep.h:
        raise QuotientAlgebraError(f"Config h={cfg.h} does not match representation h={rep.h}")
    if cfg.is_quotient and cfg.c != rep.c_k:
        raise QuotientAlgebraError(f"Config c={cfg.c} does not match c_k={rep.c_k} for l={rep.l}")

    U, V, W = rep.rescaled()
    matrices = {"u": U, "v": V, "w": W}
    dim = rep.l + 1
    direct = word_matrix(word, matrices, dim)
    return nfpoly_matrix(reduce(word, cfg), matrices, dim) == direct
