"""
The braided trace on A_{0,q}^c.

tr_q is the functional killing every nontrivial isotypic component of the
U_q(sl(2))-module A_{0,q}^c, normalized by tr_q(1) = 1. On the degree <= d
part the nontrivial components are spanned by the images X.b, Y.b, H.b of
the basis; a nonzero-weight monomial is its own H-image up to a scalar, so
the functional is supported on the weight-zero monomials 1, v, ..., v^d.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Union

from qscalar import QMatrix, QScalar, RationalLike
from quotient_algebra import AlgebraConfig, NFPoly, rewrite_system, uq_act
from uq_modules import Generator

from .data_structures import ExponentSign, InvariantProjector, TraceComparison
from .exceptions import RankDeficiencyError, TraceInvolutionError

logger = logging.getLogger(__name__)

ScalarInput = Union[QScalar, RationalLike]


def _as_q0(q0: Optional[RationalLike]) -> Optional[Fraction]:
    return None if q0 is None else Fraction(q0)


@lru_cache(maxsize=None)
def _build_projector(d: int, c: QScalar, q0: Optional[Fraction]) -> InvariantProjector:
    cfg = AlgebraConfig.quotient(h=0, c=c)
    system = rewrite_system(cfg)
    basis = tuple(m for degree in range(d + 1) for m in system.normal_monomials(degree))
    position = {m: i for i, m in enumerate(basis)}
    n = len(basis)

    actions = {}
    for gen in Generator:
        columns = []
        for exponents in basis:
            column = [QScalar(0)] * n
            for image, coeff in uq_act(gen, NFPoly.monomial(exponents), cfg).items():
                column[position[image]] = coeff
            columns.append(column)
        actions[gen] = QMatrix.from_columns(columns)

    complement = actions[Generator.X].hstack(actions[Generator.Y], actions[Generator.H])
    if q0 is not None:
        complement = complement.eval_at(q0)

    weight_zero = [i for i, (a, _, e) in enumerate(basis) if a == e]
    block = complement.submatrix(weight_zero, range(complement.ncols))
    kernel = block.left_nullspace()
    if len(kernel) != 1:
        raise RankDeficiencyError(
            f"Invariant functional on degree <= {d} has {len(kernel)} solutions (c={c}, q0={q0})"
        )

    unit = weight_zero.index(position[(0, 0, 0)])
    scale = kernel[0][unit]
    if scale.is_zero():
        raise RankDeficiencyError(f"Invariant functional vanishes on 1 (c={c}, q0={q0})")

    functional = [QScalar(0)] * n
    for i, value in zip(weight_zero, kernel[0]):
        functional[i] = value / scale
    logger.debug(f"Built invariant projector for d={d}, c={c}, q0={q0} on {n} monomials")
    return InvariantProjector(
        d=d, cfg=cfg, basis=basis, actions=actions, complement=complement,
        functional=tuple(functional), q0=q0,
    )


def build_invariant_projector(d: int, c: ScalarInput,
                              q0: Optional[RationalLike] = None) -> InvariantProjector:
    """Invariant functional on the degree <= d part of A_{0,q}^c, optionally at q = q0."""
    if not isinstance(d, int) or d < 0:
        raise TraceInvolutionError(f"Degree bound must be a nonnegative integer, got {d!r}")
    q0 = _as_q0(q0)
    if q0 == 0:
        raise TraceInvolutionError("q0 must be nonzero")
    return _build_projector(d, QScalar(c), q0)


def check_complement_spans(projector: InvariantProjector) -> bool:
    """The complement together with the unit spans the whole degree <= d part."""
    unit = [0] * projector.dim
    unit[projector.index((0, 0, 0))] = 1
    return projector.complement.hstack(QMatrix.column(unit)).rank() == projector.dim


def _evaluate(value: QScalar, q0: Optional[Fraction]) -> QScalar:
    return value if q0 is None else QScalar(value.eval_at(q0))


def braided_trace(x: NFPoly, c: ScalarInput, d: Optional[int] = None,
                  q0: Optional[RationalLike] = None) -> QScalar:
    """tr_q(x) in A_{0,q}^c: the coefficient of 1 when x = lambda*1 + (complement)."""
    d = max(x.degree(), 0) if d is None else d
    if x.degree() > d:
        raise TraceInvolutionError(f"Element of degree {x.degree()} exceeds the bound d={d}")
    if not x.is_quotient_normal():
        raise TraceInvolutionError(f"{x} is not a normal form of the quotient algebra")

    projector = build_invariant_projector(d, c, q0)
    total = QScalar(0)
    for exponents, coeff in x.items():
        weight = projector.functional[projector.index(exponents)]
        if not weight.is_zero():
            total = total + _evaluate(coeff, projector.q0) * weight
    return total


def invariant_projection(x: NFPoly, c: ScalarInput, d: Optional[int] = None,
                         q0: Optional[RationalLike] = None) -> NFPoly:
    """P_inv(x) = tr_q(x) * 1."""
    return NFPoly.monomial((0, 0, 0), braided_trace(x, c, d, q0))


def trace_of_power(m: int, c: ScalarInput, q0: Optional[RationalLike] = None) -> QScalar:
    """tr_q(v^m) by invariant projection."""
    if m < 0:
        raise TraceInvolutionError(f"Power must be nonnegative, got {m}")
    return braided_trace(NFPoly.monomial((0, m, 0)), c, d=m, q0=q0)


def trace_formula_vm(m: int, c: ScalarInput, sign: ExponentSign = ExponentSign.PLUS) -> QScalar:
    """
    (q^2-1)/(2(q^{2m+2}-1)) (1+(-1)^m) q^{sm} c^{sm/2}, s = +1 or -1.

    Odd m gives 0, so only integer powers of c are ever formed.
    """
    if m < 0:
        raise TraceInvolutionError(f"Power must be nonnegative, got {m}")
    if m % 2:
        return QScalar(0)
    sign = ExponentSign(sign)
    c = QScalar(c)
    s = 1 if sign is ExponentSign.PLUS else -1
    if s < 0 and m and c.is_zero():
        raise TraceInvolutionError("The negative-exponent formula is undefined at c = 0")

    q2 = QScalar.q_power(2)
    prefactor = (q2 - 1) / (QScalar.q_power(2 * m + 2) - 1)
    return prefactor * QScalar.q_power(s * m) * c ** (s * (m // 2))


def compare_trace_formula(m: int, c: ScalarInput, q0: Optional[RationalLike] = None) -> TraceComparison:
    """Projection value of tr_q(v^m) against both sign conventions."""
    q0 = _as_q0(q0)
    c = QScalar(c)
    projection = trace_of_power(m, c, q0)
    plus = _evaluate(trace_formula_vm(m, c, ExponentSign.PLUS), q0)
    minus = None
    if m % 2 or not c.is_zero() or m == 0:
        minus = _evaluate(trace_formula_vm(m, c, ExponentSign.MINUS), q0)

    comparison = TraceComparison(
        m=m, c=c, projection=projection, formula_plus=plus, formula_minus=minus, q0=q0,
    )
    logger.info(f"tr_q(v^{m}) at c={c}: {comparison.to_dict()}")
    return comparison


def ad_invariance_residuals(x: NFPoly, c: ScalarInput, d: Optional[int] = None) -> List[QScalar]:
    """tr_q(g.x) for g in X, Y, H; all vanish for an invariant functional."""
    cfg = AlgebraConfig.quotient(h=0, c=QScalar(c))
    d = max(x.degree(), 0) if d is None else d
    return [braided_trace(uq_act(gen, x, cfg), c, d) for gen in Generator]
