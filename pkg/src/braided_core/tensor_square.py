"""
Decomposition of V x V into the spin 0, 1 and 2 components and the braiding.

The components are spanned by

    V_0: (q^3+q)uw + vv + (q+q^-1)wu
    V_1: q^2 uv - vu,  (q^3+q)(uw - wu) + (1-q^2)vv,  -q^2 vw + wv
    V_2: uu,  uv + q^2 vu,  uw - q vv + q^4 wu,  vw + q^2 wv,  ww

and the projectors are obtained by inverting the change of basis.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from qscalar import QMatrix, QScalar, q
from uq_modules import Generator

from .data_structures import TENSOR_LABELS, TensorSquare
from .exceptions import ProjectorError
from .vmodule import T, tensor_power_action

logger = logging.getLogger(__name__)

Q2 = QScalar.q_power(2)
Q3_PLUS_Q = QScalar.q_power(3) + q


def tensor_vector(terms: Dict[str, QScalar]) -> Tuple[QScalar, ...]:
    """Coordinates in the ordered basis uu, uv, ..., ww from a label mapping."""
    vector = [QScalar(0)] * 9
    for label, coeff in terms.items():
        vector[TENSOR_LABELS.index(label)] = vector[TENSOR_LABELS.index(label)] + coeff
    return tuple(vector)


def casimir_tensor() -> Tuple[QScalar, ...]:
    return tensor_vector({'uw': Q3_PLUS_Q, 'vv': QScalar(1), 'wu': T})


def _component_spans() -> Dict[int, Tuple[Tuple[QScalar, ...], ...]]:
    one = QScalar(1)
    return {
        0: (casimir_tensor(),),
        1: (
            tensor_vector({'uv': Q2, 'vu': -one}),
            tensor_vector({'uw': Q3_PLUS_Q, 'wu': -Q3_PLUS_Q, 'vv': one - Q2}),
            tensor_vector({'vw': -Q2, 'wv': one}),
        ),
        2: (
            tensor_vector({'uu': one}),
            tensor_vector({'uv': one, 'vu': Q2}),
            tensor_vector({'uw': one, 'vv': -q, 'wu': QScalar.q_power(4)}),
            tensor_vector({'vw': one, 'wv': Q2}),
            tensor_vector({'ww': one}),
        ),
    }


def _is_invariant(span: Sequence[Sequence[QScalar]]) -> bool:
    basis = QMatrix.from_columns(span)
    rank = basis.rank()
    for gen in Generator:
        images = tensor_power_action(gen, 2) @ basis
        if basis.hstack(images).rank() != rank:
            return False
    return True


@lru_cache(maxsize=None)
def decompose_tensor_square() -> TensorSquare:
    """Spans and projectors of V_0, V_1, V_2; each span is checked invariant."""
    spans = _component_spans()
    for spin, span in spans.items():
        if not _is_invariant(span):
            raise ProjectorError(f"Spin-{spin} component is not invariant under the coproduct action")

    ordered = [vector for spin in (0, 1, 2) for vector in spans[spin]]
    basis_change = QMatrix.from_columns(ordered)
    inverse = basis_change.inverse()

    projectors = []
    offset = 0
    for spin in (0, 1, 2):
        size = len(spans[spin])
        selector = QMatrix.diag([1 if offset <= i < offset + size else 0 for i in range(9)])
        projectors.append(basis_change @ selector @ inverse)
        offset += size

    logger.debug("Decomposed V x V into components of dimension 1, 3, 5")
    return TensorSquare(spans=spans, basis_change=basis_change, projectors=tuple(projectors))


def braiding_operator() -> QMatrix:
    """S = P_0 - P_1 + P_2: +1 on V_0 and V_2, -1 on V_1."""
    ts = decompose_tensor_square()
    return ts.projector(0) - ts.projector(1) + ts.projector(2)


def highest_weight_vectors() -> Dict[int, Tuple[QScalar, ...]]:
    """X-killed generator of each component: C_q, q^2 uv - vu, uu."""
    spans = decompose_tensor_square().spans
    return {0: spans[0][0], 1: spans[1][0], 2: spans[2][0]}


def check_highest_weight_vectors() -> bool:
    action = tensor_power_action(Generator.X, 2)
    return all(
        (action @ QMatrix.column(vector)).is_zero()
        for vector in highest_weight_vectors().values()
    )


def projector_residuals() -> List[Tuple[str, QMatrix]]:
    """Idempotency, completeness and equivariance of the projectors and S."""
    ts = decompose_tensor_square()
    identity = QMatrix.identity(9)
    residuals = []
    for spin, P in enumerate(ts.projectors):
        residuals.append((f"P{spin}^2=P{spin}", P @ P - P))
    residuals.append(("P0+P1+P2=id", ts.projector(0) + ts.projector(1) + ts.projector(2) - identity))

    S = braiding_operator()
    residuals.append(("S^2=id", S @ S - identity))
    for gen in Generator:
        action = tensor_power_action(gen, 2)
        for name, operator in [("P0", ts.projector(0)), ("P1", ts.projector(1)),
                               ("P2", ts.projector(2)), ("S", S)]:
            residuals.append((f"[{name},{gen.value}]=0", operator @ action - action @ operator))
    return residuals


def check_projectors() -> bool:
    failed = [name for name, residual in projector_residuals() if not residual.is_zero()]
    if failed:
        logger.info(f"Tensor-square identities failing: {failed}")
    return not failed


def flip_operator() -> QMatrix:
    """The classical flip a x b -> b x a."""
    rows = [[0] * 9 for _ in range(9)]
    for a in range(3):
        for b in range(3):
            rows[3 * b + a][3 * a + b] = 1
    return QMatrix(rows)
