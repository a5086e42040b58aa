"""
The induced action rho_End on End(U_k).

With coproduct Delta(X) = X x 1 + q^-H x X, Delta(Y) = Y x q^H + 1 x Y and
antipode gamma(X) = -q^H X, gamma(Y) = -Y q^-H, gamma(H) = -H, the action
rho_End(a)M = rho(a_1) M rho(gamma(a_2)) reads

    rho_End(X)M = XM - q^-H M q^H X
    rho_End(H)M = HM - MH
    rho_End(Y)M = (YM - MY) q^-H
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from qscalar import QMatrix, QScalar, q

from .data_structures import EndoElement, Generator, SpinModule
from .exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


def _check_dimension(m: SpinModule, M: EndoElement) -> None:
    if M.l != m.l:
        raise DimensionMismatchError(f"EndoElement with l={M.l} used with module l={m.l}")


COPRODUCT: Dict[Generator, Tuple[Tuple[str, str], ...]] = {
    Generator.X: (("X", "1"), ("K^-1", "X")),
    Generator.Y: (("Y", "K"), ("1", "Y")),
    Generator.H: (("H", "1"), ("1", "H")),
}


GROUPLIKE = frozenset({"1", "K", "K^-1"})


def iterated_coproduct(gen: Generator, factors: int) -> List[Tuple[str, ...]]:
    """
    Terms of the iterated coproduct of gen on a tensor power.

    Each term is a tuple of factor labels, e.g. for X on three factors:
    (X, 1, 1), (K^-1, X, 1), (K^-1, K^-1, X). The counit of X, Y, H is zero,
    so zero factors yield no terms.
    """
    if factors < 1:
        return []
    terms = [(gen.value,)]
    for _ in range(factors - 1):
        expanded = []
        for term in terms:
            head, last = term[:-1], term[-1]
            if last in GROUPLIKE:
                expanded.append(term + (last,))
            else:
                expanded.extend(head + pair for pair in COPRODUCT[Generator(last)])
        terms = expanded
    return terms


def rho(m: SpinModule, label: str) -> QMatrix:
    """Image of a coproduct factor label under the spin representation."""
    return {
        "1": QMatrix.identity(m.dim),
        "X": m.X,
        "Y": m.Y,
        "H": m.H,
        "K": m.qH,
        "K^-1": m.qH_inv,
    }[label]


def rho_antipode(m: SpinModule, label: str) -> QMatrix:
    """rho(gamma(a)) for a coproduct factor label."""
    return {
        "1": QMatrix.identity(m.dim),
        "X": -(m.qH @ m.X),
        "Y": -(m.Y @ m.qH_inv),
        "H": -m.H,
        "K": m.qH_inv,
        "K^-1": m.qH,
    }[label]


def endo_action(m: SpinModule, gen: Generator, M: EndoElement) -> EndoElement:
    """rho_End(gen) applied to M."""
    _check_dimension(m, M)
    image = QMatrix.zeros(m.dim, m.dim)
    for left, right in COPRODUCT[gen]:
        image = image + rho(m, left) @ M.matrix @ rho_antipode(m, right)
    return EndoElement(m.l, image)


def endo_qpower(m: SpinModule, M: EndoElement, sign: int = 1) -> EndoElement:
    """rho_End(q^{sign*H})M, i.e. conjugation by rho(q^{sign*H})."""
    _check_dimension(m, M)
    K, K_inv = (m.qH, m.qH_inv) if sign > 0 else (m.qH_inv, m.qH)
    return EndoElement(m.l, K @ M.matrix @ K_inv)


def check_endo_multiplicativity(m: SpinModule, gen: Generator,
                                M1: EndoElement, M2: EndoElement) -> bool:
    """rho_End(a)(M1 M2) = rho_End(a_1)M1 rho_End(a_2)M2 with the coproduct expanded."""
    lhs = endo_action(m, gen, M1 @ M2)
    if gen is Generator.X:
        rhs = endo_action(m, gen, M1) @ M2 + endo_qpower(m, M1, -1) @ endo_action(m, gen, M2)
    elif gen is Generator.Y:
        rhs = endo_action(m, gen, M1) @ endo_qpower(m, M2, 1) + M1 @ endo_action(m, gen, M2)
    else:
        rhs = endo_action(m, gen, M1) @ M2 + M1 @ endo_action(m, gen, M2)
    return lhs.matrix == rhs.matrix


def elementary_basis(m: SpinModule) -> List[EndoElement]:
    """E_ij in row-major order."""
    n = m.dim
    basis = []
    for i in range(n):
        for j in range(n):
            rows = [[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)]
            basis.append(EndoElement(m.l, QMatrix(rows)))
    return basis


def operator_matrix(m: SpinModule, action: Callable[[EndoElement], EndoElement]) -> QMatrix:
    """Matrix of a linear map on End(U_k) in the row-major elementary basis."""
    columns = [action(E).matrix.entries() for E in elementary_basis(m)]
    return QMatrix.from_columns(columns)


def endo_operator(m: SpinModule, gen: Generator) -> QMatrix:
    return operator_matrix(m, lambda M: endo_action(m, gen, M))


def endo_module_residuals(m: SpinModule) -> Dict[str, QMatrix]:
    """The U_q(sl(2)) relations for the operators rho_End(X), rho_End(Y), rho_End(H)."""
    EX = endo_operator(m, Generator.X)
    EY = endo_operator(m, Generator.Y)
    EH = endo_operator(m, Generator.H)
    EK = operator_matrix(m, lambda M: endo_qpower(m, M, 1))
    EK_inv = operator_matrix(m, lambda M: endo_qpower(m, M, -1))
    cartan = (EK - EK_inv).scale(QScalar(1) / (q - QScalar.q_power(-1)))
    return {
        '[H,X]=2X': EH @ EX - EX @ EH - EX.scale(2),
        '[H,Y]=-2Y': EH @ EY - EY @ EH + EY.scale(2),
        '[X,Y]=[H]_q': EX @ EY - EY @ EX - cartan,
    }


def check_endo_module_relations(m: SpinModule) -> bool:
    return all(residual.is_zero() for residual in endo_module_residuals(m).values())


def check_antipode(m: SpinModule) -> bool:
    """rho(a_1) rho(gamma(a_2)) = epsilon(a) id for a in {X, Y, H}; epsilon vanishes on all three."""
    for gen, terms in COPRODUCT.items():
        total = QMatrix.zeros(m.dim, m.dim)
        for left, right in terms:
            total = total + rho(m, left) @ rho_antipode(m, right)
        if not total.is_zero():
            logger.info(f"Antipode identity fails for {gen.value} on l={m.l}")
            return False
    return True


def weight_kernel_system(m: SpinModule, weight: int = 2) -> QMatrix:
    """Stacked system rho_End(X)M = 0, rho_End(H)M = weight*M."""
    n2 = m.dim * m.dim
    EX = endo_operator(m, Generator.X)
    EH = endo_operator(m, Generator.H)
    return EX.vstack(EH - QMatrix.identity(n2).scale(weight))


def highest_weight_kernel(m: SpinModule, weight: int = 2) -> List[EndoElement]:
    """Basis of the highest-weight vectors of the given weight in End(U_k)."""
    n = m.dim
    basis = []
    for vector in weight_kernel_system(m, weight).nullspace():
        rows = [vector[i * n:(i + 1) * n] for i in range(n)]
        basis.append(EndoElement(m.l, QMatrix(rows)))
    return basis


def highest_weight_kernel_dimension(m: SpinModule, weight: int = 2,
                                    samples: Optional[Iterable[Fraction]] = None) -> int:
    """
    Dimension of the weight kernel, symbolically or at sampled q values.

    With samples, every sample must agree; a disagreement is reported as -1
    since at least one sample then sits on the exceptional set.
    """
    system = weight_kernel_system(m, weight)
    if samples is None:
        return system.ncols - system.rank()
    dimensions = {system.ncols - system.rank_at(q0) for q0 in samples}
    if len(dimensions) != 1:
        logger.warning(f"Sampled kernel dimensions disagree for l={m.l}: {sorted(dimensions)}")
        return -1
    return dimensions.pop()
