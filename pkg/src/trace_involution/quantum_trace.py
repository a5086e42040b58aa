"""
Quantum trace Tr_q(M) = Tr(M rho(K)) on End(U_k), K = q^H or q^-H.

The invariant convention is the one with Tr_q(rho_End(a)M) = epsilon(a) Tr_q(M)
for a in {X, Y, H}; epsilon vanishes on all three generators.
"""

import logging
from typing import Dict, Iterable, List

from qscalar import QMatrix, QScalar
from uq_modules import EndoElement, Generator, SpinModule, build_spin_module, elementary_basis, endo_action

from .data_structures import QTraceConvention
from .exceptions import ConventionError

logger = logging.getLogger(__name__)


def twist_matrix(module: SpinModule, convention: QTraceConvention) -> QMatrix:
    return module.qH if convention is QTraceConvention.Q_H else module.qH_inv


def quantum_trace_end(l: int, M: EndoElement, convention: QTraceConvention) -> QScalar:
    module = build_spin_module(l)
    return (M.matrix @ twist_matrix(module, QTraceConvention(convention))).trace()


def invariance_residuals(l: int, convention: QTraceConvention,
                         generators: Iterable[Generator] = tuple(Generator)) -> Dict[str, QScalar]:
    """Nonzero values of Tr_q(rho_End(a)E_ij) over the elementary matrices."""
    module = build_spin_module(l)
    n = module.dim
    residuals = {}
    for gen in generators:
        for index, E in enumerate(elementary_basis(module)):
            value = quantum_trace_end(l, endo_action(module, gen, E), convention)
            if not value.is_zero():
                residuals[f"{gen.value}.E{index // n}{index % n}"] = value
    return residuals


def check_invariance(l: int, convention: QTraceConvention,
                     generators: Iterable[Generator] = tuple(Generator)) -> bool:
    return not invariance_residuals(l, convention, generators)


def passing_conventions(l: int) -> List[QTraceConvention]:
    return [
        convention for convention in QTraceConvention
        if check_invariance(l, convention, (Generator.X, Generator.Y))
    ]


def select_convention(l: int) -> QTraceConvention:
    """The unique twist passing the X- and Y-invariance tests."""
    if not isinstance(l, int) or l < 1:
        raise ConventionError(f"Both twists agree on the trivial module; l must be >= 1, got {l!r}")
    passing = passing_conventions(l)
    if len(passing) != 1:
        raise ConventionError(f"Expected one invariant convention for l={l}, found {[c.value for c in passing]}")
    logger.debug(f"Quantum trace convention for l={l}: {passing[0].value}")
    return passing[0]
