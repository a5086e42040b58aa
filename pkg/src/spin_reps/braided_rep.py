"""
Spin-k almost representations of the braided sl(2).

U is the highest-weight vector diag_+(q^{2(l-1)}, q^{2(l-2)}, ..., 1) of the
unique copy of V inside End(U_k); V and W are obtained by lowering:

    V = -rho_End(Y)U,    W = (q+q^-1)^-1 rho_End(Y)V.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional

import sympy

from braided_core import T, extract_factor, holds_with_factor
from qscalar import QMatrix, QScalar, RationalLike, q, qint
from uq_modules import EndoElement, Generator, build_spin_module, endo_action, highest_weight_kernel_dimension

from .data_structures import BraidedRep
from .exceptions import NonScalarCasimirError, RepParameterError, ThetaMismatchError

logger = logging.getLogger(__name__)

Q3_PLUS_Q = QScalar.q_power(3) + q


def theta_formula(l: int) -> QScalar:
    """theta = q^{2l+1} + q^-1."""
    return QScalar.q_power(2 * l + 1) + QScalar.q_power(-1)


def casimir_formula(l: int) -> QScalar:
    """b_l b_{l+2} q^{2l-2}."""
    return qint(l) * qint(l + 2) * QScalar.q_power(2 * l - 2)


def casimir_matrix(U: QMatrix, V: QMatrix, W: QMatrix) -> QMatrix:
    """(q^3+q)UW + V^2 + (q+q^-1)WU."""
    return (U @ W).scale(Q3_PLUS_Q) + V @ V + (W @ U).scale(T)


def _validate(l: int, h: Fraction) -> None:
    if not isinstance(l, int) or l < 1:
        raise RepParameterError(f"l must be a positive integer, got {l!r}")
    if h == 0:
        raise RepParameterError("h must be nonzero")


def highest_weight_u(l: int) -> QMatrix:
    return QMatrix.superdiag([QScalar.q_power(2 * (l - 1 - i)) for i in range(l)])


@lru_cache(maxsize=None)
def build_braided_rep(l: int, h: RationalLike) -> BraidedRep:
    """Build (U, V, W), extract theta and verify all three relations with it."""
    h = Fraction(h)
    _validate(l, h)
    module = build_spin_module(l)

    U = EndoElement(l, highest_weight_u(l))
    V = endo_action(module, Generator.Y, U).scale(-1)
    W = endo_action(module, Generator.Y, V).scale(QScalar(1) / T)

    theta = extract_factor(U.matrix, V.matrix)
    if theta is None or not holds_with_factor(U.matrix, V.matrix, W.matrix, theta):
        raise ThetaMismatchError(f"Relations for l={l} do not share one factor theta={theta}")

    casimir = casimir_value_of(U.matrix, V.matrix, W.matrix)
    rep = BraidedRep(
        l=l, h=h, U=U, V=V, W=W,
        theta=theta,
        nu=theta / QScalar(2 * h),
        casimir_scalar=casimir,
        rescale=QScalar(2 * h) / theta,
    )
    logger.debug(f"Built braided rep l={l}, h={h}: theta = {theta}")
    return rep


def casimir_value_of(U: QMatrix, V: QMatrix, W: QMatrix) -> QScalar:
    value = casimir_matrix(U, V, W).scalar_value()
    if value is None:
        raise NonScalarCasimirError("Braided Casimir image is not a scalar matrix")
    return value


def casimir_value(rep: BraidedRep) -> QScalar:
    """Scalar by which the braided Casimir acts on U_k."""
    return casimir_value_of(rep.U.matrix, rep.V.matrix, rep.W.matrix)


def braided_module_value(l: int, h: RationalLike, cross_check: bool = True) -> QScalar:
    """c_k = b_l b_{l+2} q^{2l-2} (2h/theta)^2, checked against the rescaled triple."""
    h = Fraction(h)
    if not isinstance(l, int) or l < 1:
        raise RepParameterError(f"l must be a positive integer, got {l!r}")
    ratio = QScalar(2 * h) / theta_formula(l)
    value = casimir_formula(l) * ratio * ratio
    if cross_check and h != 0:
        matrix_value = casimir_value_of(*build_braided_rep(l, h).rescaled())
        if matrix_value != value:
            raise NonScalarCasimirError(
                f"c_k formula {value} disagrees with the rescaled Casimir {matrix_value} for l={l}"
            )
    return value


def verify_unicity(l: int, samples: Optional[Iterable[RationalLike]] = None) -> bool:
    """True iff End(U_k) holds exactly one highest-weight vector of weight 2."""
    if not isinstance(l, int) or l < 0:
        raise RepParameterError(f"l must be a nonnegative integer, got {l!r}")
    module = build_spin_module(l)
    if samples is not None:
        samples = [Fraction(s) for s in samples]
    dimension = highest_weight_kernel_dimension(module, 2, samples)
    logger.debug(f"Weight-2 kernel in End(U) for l={l} has dimension {dimension}")
    return dimension == 1


def check_highest_weight(rep: BraidedRep) -> bool:
    module = build_spin_module(rep.l)
    return (
        endo_action(module, Generator.X, rep.U).is_zero()
        and endo_action(module, Generator.H, rep.U).matrix == rep.U.matrix.scale(2)
    )


def check_weights(rep: BraidedRep) -> bool:
    """U, V, W have rho_End(H)-weights 2, 0, -2."""
    module = build_spin_module(rep.l)
    return all(
        endo_action(module, Generator.H, M).matrix == M.matrix.scale(weight)
        for M, weight in ((rep.U, 2), (rep.V, 0), (rep.W, -2))
    )


def check_rescaled_relations(rep: BraidedRep) -> bool:
    """The rescaled triple satisfies the A_{h,q} relations with factor exactly 1."""
    return holds_with_factor(*rep.rescaled(), QScalar(2 * rep.h))


def first_entry_derivation(rep: BraidedRep) -> bool:
    """
    theta = v_1 - q^2 v_2 with v_1 = y_1 q^{l-2}, v_2 = y_2 q^{l-2} - y_1 q^l
    the first two diagonal entries of V (y_2 = 0 when l = 1).
    """
    y = build_spin_module(rep.l).y_entries()
    y1 = y[0]
    y2 = y[1] if rep.l >= 2 else QScalar(0)
    v1 = y1 * QScalar.q_power(rep.l - 2)
    v2 = y2 * QScalar.q_power(rep.l - 2) - y1 * QScalar.q_power(rep.l)
    V = rep.V.matrix
    return V[0, 0] == v1 and V[1, 1] == v2 and rep.theta == v1 - QScalar.q_power(2) * v2


def casimir_commutes_with_action(rep: BraidedRep) -> bool:
    """rho_End(a) kills the Casimir image for a in {X, Y, H}."""
    module = build_spin_module(rep.l)
    image = EndoElement(rep.l, casimir_matrix(rep.U.matrix, rep.V.matrix, rep.W.matrix))
    return all(endo_action(module, gen, image).is_zero() for gen in Generator)


def classical_limit_holds(rep: BraidedRep) -> bool:
    """At q = 1 the rescaled triple satisfies [U,V] = -2hU, 2[U,W] = 2hV, [W,V] = 2hW."""
    U, V, W = (M.eval_at(1) for M in rep.rescaled())
    two_h = 2 * rep.h
    residuals = [
        U @ V - V @ U + U.scale(two_h),
        (U @ W - W @ U).scale(2) - V.scale(two_h),
        W @ V - V @ W - W.scale(two_h),
    ]
    return all(residual.is_zero() for residual in residuals)


def theta_real_zero_free(l: int) -> bool:
    """theta vanishes iff q^{2l+2} = -1, which has no real solution."""
    numerator = theta_formula(l).numerator.as_expr()
    symbol = sympy.Symbol("q")
    return sympy.Poly(numerator, symbol).count_roots() == 0


def excluded_q_factors(rep: BraidedRep) -> List[str]:
    """Irreducible denominator factors (other than q) met in the rescaled triple and c_k."""
    polynomials = [rep.c_k.denominator.as_expr()]
    for matrix in rep.rescaled():
        polynomials.extend(den.numerator.as_expr() for den in matrix.denominators())
    factors = set()
    for polynomial in polynomials:
        _, factor_list = sympy.factor_list(polynomial)
        for factor, _ in factor_list:
            if factor.free_symbols and factor != sympy.Symbol("q"):
                factors.add(str(factor))
    return sorted(factors)
