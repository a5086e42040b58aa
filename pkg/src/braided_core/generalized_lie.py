"""
Generalized Lie structure conditions on I = V_1 + V_0.

With K = (I x V) n (V x I) inside V x V x V, the checks are

    (a) (alpha x id - id x alpha)(K) lies in I
    (b) alpha(alpha x id - id x alpha) + beta x id - id x beta vanishes on K
    (c) beta(alpha x id - id x alpha) vanishes on K
"""

import logging
from fractions import Fraction
from typing import List, Optional

from qscalar import QMatrix, QScalar, RationalLike

from .bracket import bracket_matrix
from .data_structures import GenLieData, GenLieReport
from .exceptions import BraidedCoreError
from .tensor_square import decompose_tensor_square

logger = logging.getLogger(__name__)


def generalized_lie_data(h: RationalLike, c: RationalLike) -> GenLieData:
    """alpha = bracket on V_1 (zero on V_0); beta = c times the V_0 coordinate."""
    h, c = Fraction(h), Fraction(c)
    ts = decompose_tensor_square()
    alpha = bracket_matrix(h) @ ts.projector(1)
    v0_coordinate = ts.basis_change.inverse().submatrix([0], range(9))
    beta = v0_coordinate.scale(c)
    return GenLieData(h=h, c=c, alpha=alpha, beta=beta)


def check_gen_lie_data(data: GenLieData) -> bool:
    """alpha kills V_0, beta kills V_1, and both match their defining values."""
    ts = decompose_tensor_square()
    casimir = QMatrix.column(ts.spans[0][0])
    v1 = QMatrix.from_columns(ts.spans[1])
    hw_v1 = QMatrix.column(ts.spans[1][0])
    expected_alpha = QMatrix.column([-2 * data.h, 0, 0])
    return (
        (data.alpha @ casimir).is_zero()
        and (data.beta @ v1).is_zero()
        and data.alpha @ hw_v1 == expected_alpha
        and (data.beta @ casimir)[0, 0] == data.c
    )


def _intersection_basis(P2: QMatrix) -> List[List[QScalar]]:
    identity = QMatrix.identity(3)
    system = P2.kron(identity).vstack(identity.kron(P2))
    return system.nullspace()


def _evaluate(matrix: QMatrix, q0: Optional[Fraction]) -> QMatrix:
    return matrix if q0 is None else matrix.eval_at(q0)


def _check_conditions(data: GenLieData, q0: Optional[Fraction]):
    ts = decompose_tensor_square()
    P2 = _evaluate(ts.projector(2), q0)
    alpha = _evaluate(data.alpha, q0)
    beta = _evaluate(data.beta, q0)
    identity = QMatrix.identity(3)

    kernel = _intersection_basis(P2)
    if not kernel:
        return 0, True, True, True

    K = QMatrix.from_columns(kernel)
    y = (alpha.kron(identity) - identity.kron(alpha)) @ K
    beta_difference = (beta.kron(identity) - identity.kron(beta)) @ K

    condition_a = (P2 @ y).is_zero()
    condition_b = (alpha @ y + beta_difference).is_zero()
    condition_c = (beta @ y).is_zero()
    return len(kernel), condition_a, condition_b, condition_c


def check_generalized_lie(h: RationalLike, c: RationalLike,
                          q0: Optional[RationalLike] = None,
                          compare_classical: bool = True) -> GenLieReport:
    """Conditions (a), (b), (c) for the given h and c, symbolically unless q0 is given."""
    data = generalized_lie_data(h, c)
    if not check_gen_lie_data(data):
        raise BraidedCoreError(f"alpha/beta do not match their defining values for h={h}, c={c}")

    q0 = None if q0 is None else Fraction(q0)
    dim_K, a, b, cond_c = _check_conditions(data, q0)
    classical = None
    if compare_classical:
        classical = _check_conditions(data, Fraction(1))[0]
        if classical != dim_K:
            logger.warning(f"dim K = {dim_K} differs from the classical value {classical}")

    report = GenLieReport(
        h=data.h, c=data.c, dim_K=dim_K,
        condition_a=a, condition_b=b, condition_c=cond_c,
        classical_dim_K=classical, q0=q0,
    )
    logger.info(f"Generalized Lie check h={data.h}, c={data.c}: {report.to_dict()}")
    return report
