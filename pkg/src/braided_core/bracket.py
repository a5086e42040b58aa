"""
The q-Lie bracket on span{u, v, w} and its left-adjoint almost representation.

With M = 2h/(1+q^4):

    [u,u] = 0          [u,v] = -q^2 M u         [u,w] = M v/(q+q^-1)
    [v,u] = M u        [v,v] = (1-q^2) M v      [v,w] = -q^2 M w
    [w,u] = -M v/(q+q^-1)   [w,v] = M w         [w,w] = 0
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from qscalar import QMatrix, QScalar, RationalLike
from uq_modules import Generator

from .data_structures import AlmostJacobiResult, QLieBracket, VVector
from .exceptions import BraidedCoreError
from .relations import definition_residuals, extract_factor
from .tensor_square import decompose_tensor_square
from .vmodule import T, build_v_module, tensor_power_action

logger = logging.getLogger(__name__)


def bracket_coefficient(h: RationalLike) -> QScalar:
    """M = 2h/(1+q^4)."""
    return QScalar(2 * Fraction(h)) / (1 + QScalar.q_power(4))


@lru_cache(maxsize=None)
def qlie_bracket_table(h: Fraction) -> QLieBracket:
    h = Fraction(h)
    M = bracket_coefficient(h)
    zero = QScalar(0)
    q2 = QScalar.q_power(2)
    table: Dict[Tuple[int, int], VVector] = {
        (0, 0): (zero, zero, zero),
        (0, 1): (-q2 * M, zero, zero),
        (0, 2): (zero, M / T, zero),
        (1, 0): (M, zero, zero),
        (1, 1): (zero, (1 - q2) * M, zero),
        (1, 2): (zero, zero, -q2 * M),
        (2, 0): (zero, -M / T, zero),
        (2, 1): (zero, zero, M),
        (2, 2): (zero, zero, zero),
    }
    return QLieBracket(h=h, M=M, table=table)


def qlie_bracket(a: Sequence, b: Sequence, h: RationalLike) -> VVector:
    """Bilinear extension of the bracket table to vectors in the basis u, v, w."""
    table = qlie_bracket_table(Fraction(h))
    result = [QScalar(0)] * 3
    for i, a_i in enumerate(a):
        if not a_i:
            continue
        for j, b_j in enumerate(b):
            if not b_j:
                continue
            for k, entry in enumerate(table.bracket_basis(i, j)):
                result[k] = result[k] + a_i * b_j * entry
    return tuple(result)


def bracket_matrix(h: RationalLike) -> QMatrix:
    """The bracket as a 3x9 map V x V -> V; column 3i+j holds [e_i, e_j]."""
    table = qlie_bracket_table(Fraction(h))
    return QMatrix.from_columns([table.bracket_basis(i, j) for i in range(3) for j in range(3)])


def adjoint_matrices(h: RationalLike) -> Tuple[QMatrix, QMatrix, QMatrix]:
    """Matrices of x -> [z, x] for z = u, v, w."""
    table = qlie_bracket_table(Fraction(h))
    return tuple(
        QMatrix.from_columns([table.bracket_basis(z, j) for j in range(3)])
        for z in range(3)
    )


def check_bracket_equivariance(h: RationalLike) -> bool:
    """bracket composed with the coproduct action equals the action on V after the bracket."""
    B = bracket_matrix(h)
    v_module = build_v_module()
    for gen in Generator:
        if B @ tensor_power_action(gen, 2) != v_module.matrix(gen) @ B:
            logger.info(f"Bracket is not {gen.value}-equivariant for h={h}")
            return False
    return True


def check_bracket_supported_on_v1(h: RationalLike) -> bool:
    """The bracket kills V_0 and V_2, so it factors through P_1."""
    ts = decompose_tensor_square()
    B = bracket_matrix(h)
    return B @ ts.projector(1) == B


def antisymmetry_defect(h: RationalLike) -> VVector:
    """[u,v] + [v,u] = (1-q^2) M u, nonzero unless q = 1."""
    u, v = (1, 0, 0), (0, 1, 0)
    return tuple(x + y for x, y in zip(qlie_bracket(u, v, h), qlie_bracket(v, u, h)))


def check_almost_jacobi(h: RationalLike) -> AlmostJacobiResult:
    """
    Find the common factor nu with which rho(z)x = [z, x] satisfies

        q^2 [u,[v,z]] - [v,[u,z]] = -2 nu h [u,z]

    and the two companion identities, for all basis z.
    """
    h = Fraction(h)
    if h == 0:
        raise BraidedCoreError("check_almost_jacobi needs h != 0")

    ad_u, ad_v, ad_w = adjoint_matrices(h)
    theta = extract_factor(ad_u, ad_v)
    if theta is None:
        return AlmostJacobiResult(h=h, nu=None, failing_relations=['uv'])

    residuals = definition_residuals(ad_u, ad_v, ad_w, theta)
    failing: List[str] = [name for name, residual in residuals.items() if not residual.is_zero()]
    nu = theta / QScalar(2 * h)
    if failing:
        logger.warning(f"Adjoint map has no common factor for h={h}: {failing}")
        return AlmostJacobiResult(h=h, nu=None, failing_relations=failing)

    inverse = nu.inverse()
    rescaled = [ad.scale(inverse) for ad in (ad_u, ad_v, ad_w)]
    genuine = all(r.is_zero() for r in definition_residuals(*rescaled, QScalar(2 * h)).values())
    logger.info(f"Adjoint almost representation for h={h}: nu = {nu}")
    return AlmostJacobiResult(h=h, nu=nu, failing_relations=[], rescaled_is_representation=genuine)
