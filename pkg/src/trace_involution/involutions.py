"""
Involutions of sl(2)_q compatible with the q-Lie bracket.

An antilinear map * on span{u, v, w} is compatible when

    [a*, b*] = -([a, b])*    for all basis pairs (a, b).

With q, h real and u* = alpha1 u + beta1 v + gamma1 w (and likewise for v*, w*)
this is a polynomial system in nine real coefficients over Q(q). The system
is solved by a small branching eliminator over a sympy polynomial ring;
involutivity J J = id is imposed afterwards.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from sympy.polys.groebnertools import groebner
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement, ring

from braided_core import TENSOR_LABELS, braiding_operator, qlie_bracket_table
from qscalar import QF, CScalar, QMatrix, QScalar, RationalLike
from quotient_algebra import AlgebraConfig, LETTERS, defining_relations, reduce_poly
from quotient_algebra.rewriting import WordPoly, add_into

from .data_structures import CVector, InvolutionCandidate, InvolutionClassification, SolutionBranch
from .exceptions import DegenerateParameterError, InvolutionPreconditionError

logger = logging.getLogger(__name__)

BracketTable = Dict[Tuple[int, int], Tuple[QScalar, QScalar, QScalar]]

# Coefficient of letter i in the image of basis vector j is COEFFICIENT_NAMES[3*j + i].
COEFFICIENT_NAMES = tuple(f"{greek}{j}" for j in (1, 2, 3) for greek in ("alpha", "beta", "gamma"))

Assignment = Dict[int, PolyElement]

UNIT_CIRCLE_NOTE = (
    "complex coefficients admit u* = alpha u, v* = -v, w* = conj(alpha) w for every |alpha| = 1; "
    "each is conjugate to diag(1,-1,1) by u -> lambda u, w -> w / lambda with lambda^2 = alpha"
)


def minus_identity() -> InvolutionCandidate:
    """a* = -conj(a)."""
    return InvolutionCandidate.diagonal([-1, -1, -1], name="-id")


def split_involution() -> InvolutionCandidate:
    """u* = u, v* = -v, w* = w."""
    return InvolutionCandidate.diagonal([1, -1, 1], name="diag(1,-1,1)")


def compact_candidate() -> InvolutionCandidate:
    """u* = w, v* = v, w* = u: the classical compact form."""
    return InvolutionCandidate.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]], name="antidiag")


def unit_circle_candidate(alpha: CScalar) -> InvolutionCandidate:
    """u* = alpha u, v* = -v, w* = conj(alpha) w; involutive iff |alpha| = 1."""
    return InvolutionCandidate.diagonal([alpha, -1, alpha.conj()], name=f"unit-circle({alpha})")


@lru_cache(maxsize=None)
def _bracket_table(h: Fraction, q0: Optional[Fraction]) -> BracketTable:
    table = qlie_bracket_table(h).table
    if q0 is None:
        return table
    return {key: tuple(QScalar(entry.eval_at(q0)) for entry in value) for key, value in table.items()}


def complex_bracket(x: Sequence, y: Sequence, table: BracketTable) -> CVector:
    result = [CScalar()] * 3
    for i, x_i in enumerate(x):
        x_i = CScalar.of(x_i)
        if x_i.is_zero():
            continue
        for j, y_j in enumerate(y):
            y_j = CScalar.of(y_j)
            if y_j.is_zero():
                continue
            for k, entry in enumerate(table[(i, j)]):
                if not entry.is_zero():
                    result[k] = result[k] + x_i * y_j * entry
    return tuple(result)


def _validate_q0(q0: Optional[RationalLike]) -> Optional[Fraction]:
    if q0 is None:
        return None
    q0 = Fraction(q0)
    if q0 in (0, 1, -1):
        raise DegenerateParameterError(
            f"At q = {q0} the constraint (1-q^2) beta1^2 = 0 degenerates; more solutions exist classically"
        )
    return q0


def involution_residuals(candidate: InvolutionCandidate, h: RationalLike,
                         q0: Optional[RationalLike] = None) -> Dict[str, CVector]:
    """[a*, b*] + ([a, b])* for the basis pairs where it does not vanish."""
    table = _bracket_table(Fraction(h), None if q0 is None else Fraction(q0))
    residuals = {}
    for a in range(3):
        for b in range(3):
            lhs = complex_bracket(candidate.image(a), candidate.image(b), table)
            rhs = candidate.apply(table[(a, b)])
            residual = tuple(x + y for x, y in zip(lhs, rhs))
            if any(not entry.is_zero() for entry in residual):
                residuals[LETTERS[a] + LETTERS[b]] = residual
    return residuals


def check_involution(candidate: InvolutionCandidate, h: RationalLike,
                     q0: Optional[RationalLike] = None) -> bool:
    """True iff [a*, b*] = -([a, b])* on all nine basis pairs."""
    return not involution_residuals(candidate, h, q0)


# Polynomial elimination

@lru_cache(maxsize=None)
def _coefficient_ring():
    R, *_ = ring(",".join(COEFFICIENT_NAMES), QF)
    return R


def _unknowns(R) -> List[List[PolyElement]]:
    """J as a 3x3 array of ring generators, J[i][j] = coefficient of letter i in e_j*."""
    return [[R.gens[3 * j + i] for j in range(3)] for i in range(3)]


def compatibility_equations(h: Fraction, q0: Optional[Fraction] = None) -> List[PolyElement]:
    """Components of [Je_a, Je_b] + J[e_a, e_b] for real J."""
    R = _coefficient_ring()
    J = _unknowns(R)
    table = _bracket_table(h, q0)
    equations = []
    for a in range(3):
        for b in range(3):
            for k in range(3):
                equation = R.zero
                for i in range(3):
                    for j in range(3):
                        entry = table[(i, j)][k]
                        if not entry.is_zero():
                            equation += J[i][a] * J[j][b] * R.ground_new(entry.value)
                for i, entry in enumerate(table[(a, b)]):
                    if not entry.is_zero():
                        equation += J[k][i] * R.ground_new(entry.value)
                equations.append(equation)
    return equations


def involutivity_equations(J: List[List[PolyElement]]) -> List[PolyElement]:
    """Entries of J J - id for real J."""
    R = _coefficient_ring()
    equations = []
    for i in range(3):
        for k in range(3):
            entry = sum((J[i][j] * J[j][k] for j in range(3)), R.zero)
            equations.append(entry - (R.one if i == k else R.zero))
    return equations


def _normalize(equations: Sequence[PolyElement]) -> Optional[List[PolyElement]]:
    """Drop zeros and duplicates; None when a nonzero constant shows inconsistency."""
    kept = {}
    for equation in equations:
        if not equation:
            continue
        if equation.is_ground:
            return None
        kept[equation.monic()] = None
    return list(kept)


def is_consistent(equations: Sequence[PolyElement]) -> bool:
    """False when the equations generate the unit ideal over Q(q), i.e. have no common solution."""
    equations = [equation for equation in equations if equation]
    if not equations:
        return True
    basis = groebner(equations, _coefficient_ring())
    return not any(element.is_ground for element in basis)


def _variables(equation: PolyElement) -> List[int]:
    return [i for i, degree in enumerate(equation.degrees()) if degree > 0]


def _substitute(equations: Sequence[PolyElement], index: int, value: PolyElement) -> List[PolyElement]:
    R = _coefficient_ring()
    return [equation.compose(R.gens[index], value) for equation in equations]


def _extend(assignment: Assignment, index: int, value: PolyElement) -> Assignment:
    R = _coefficient_ring()
    extended = {key: expr.compose(R.gens[index], value) for key, expr in assignment.items()}
    extended[index] = value
    return extended


def _linear_substitution(equations: Sequence[PolyElement]) -> Optional[Tuple[int, PolyElement]]:
    """A variable occurring linearly with a constant coefficient, solved for."""
    R = _coefficient_ring()
    for equation in equations:
        for index in _variables(equation):
            x = R.gens[index]
            if equation.degree(x) != 1:
                continue
            coefficient = equation.diff(x)
            if coefficient.is_ground:
                rest = equation - x * coefficient
                return index, -rest.quo_ground(coefficient.LC)
    return None


def _common_factor(equation: PolyElement) -> Optional[Tuple[int, int]]:
    """(variable, power) dividing every term of the equation."""
    monoms = equation.monoms()
    for index in range(len(monoms[0])):
        power = min(monom[index] for monom in monoms)
        if power > 0:
            return index, power
    return None


def _univariate_roots(equation: PolyElement, index: int) -> Optional[List]:
    """Real roots in Q(q) of a one-variable equation, None if some root is not rational in q."""
    symbol = sympy.Symbol(COEFFICIENT_NAMES[index])
    numerator, _ = sympy.fraction(sympy.together(equation.as_expr()))
    poly = sympy.Poly(numerator, symbol)
    found = sympy.roots(poly)
    if sum(found.values()) != poly.degree():
        return None

    values = []
    for root in found:
        if root.is_real is False:
            continue
        try:
            values.append(QF.from_sympy(root))
        except (CoercionFailed, TypeError, ValueError):
            return None
    return values


def _solve(equations: Sequence[PolyElement], assignment: Assignment) -> List[Tuple[Assignment, List[PolyElement]]]:
    """
    Branching elimination. Each returned branch is an assignment of some
    coefficients (in terms of the free ones) plus equations left unsolved.
    """
    R = _coefficient_ring()
    equations = _normalize(equations)
    if equations is None:
        return []
    if not equations:
        return [(assignment, [])]

    linear = _linear_substitution(equations)
    if linear is not None:
        index, value = linear
        return _solve(_substitute(equations, index, value), _extend(assignment, index, value))

    for position, equation in enumerate(equations):
        factor = _common_factor(equation)
        if factor is None:
            continue
        index, power = factor
        branches = _solve(_substitute(equations, index, R.zero), _extend(assignment, index, R.zero))
        remaining = list(equations)
        remaining[position] = equation.exquo(R.gens[index] ** power)
        return branches + _solve(remaining, assignment)

    for equation in equations:
        variables = _variables(equation)
        if len(variables) != 1:
            continue
        roots = _univariate_roots(equation, variables[0])
        if roots is None:
            continue
        branches = []
        for root in roots:
            value = R.ground_new(root)
            branches.extend(_solve(_substitute(equations, variables[0], value),
                                   _extend(assignment, variables[0], value)))
        return branches

    if not is_consistent(equations):
        logger.debug(f"Dropping inconsistent branch: {[str(eq.as_expr()) for eq in equations]}")
        return []
    return [(assignment, equations)]


def _matrix_of(assignment: Assignment) -> List[List[PolyElement]]:
    R = _coefficient_ring()
    J = _unknowns(R)
    return [[assignment.get(3 * j + i, J[i][j]) for j in range(3)] for i in range(3)]


def _branch(J: List[List[PolyElement]], residual: Sequence[PolyElement]) -> SolutionBranch:
    free = sorted({COEFFICIENT_NAMES[i] for row in J for entry in row for i in _variables(entry)})
    if not free and not residual:
        candidate = InvolutionCandidate.from_rows(
            [[CScalar(QScalar(entry.LC)) for entry in row] for row in J]
        )
        return SolutionBranch(
            entries=tuple(tuple(str(entry) for entry in row) for row in J),
            candidate=candidate,
        )
    return SolutionBranch(
        entries=tuple(tuple(str(entry.as_expr()) for entry in row) for row in J),
        free=tuple(free),
        residual=tuple(str(equation.as_expr()) for equation in residual),
    )


def solve_compatibility(h: RationalLike, q0: Optional[RationalLike] = None) -> List[SolutionBranch]:
    """All branches of the compatibility system before involutivity is imposed."""
    h = Fraction(h)
    if h == 0:
        raise InvolutionPreconditionError("At h = 0 the bracket vanishes and every map is compatible")
    q0 = _validate_q0(q0)
    return [
        _branch(_matrix_of(assignment), residual)
        for assignment, residual in _solve(compatibility_equations(h, q0), {})
    ]


def classify_involutions(h: RationalLike, q0: Optional[RationalLike] = None) -> InvolutionClassification:
    """Real compatible involutions, for symbolic q (or a sample q0 != 0, 1, -1)."""
    h = Fraction(h)
    if h == 0:
        raise InvolutionPreconditionError("At h = 0 the bracket vanishes and every map is compatible")
    q0 = _validate_q0(q0)

    result = InvolutionClassification(h=h, q0=q0)
    for assignment, residual in _solve(compatibility_equations(h, q0), {}):
        J = _matrix_of(assignment)
        branch = _branch(J, residual)
        if not branch.is_point and branch not in result.families:
            result.families.append(branch)

        for final, leftover in _solve(list(residual) + involutivity_equations(J), assignment):
            solved = _branch(_matrix_of(final), leftover)
            if not solved.is_point:
                logger.warning(f"Unresolved involution family: {solved.describe()}")
                continue
            candidate = solved.candidate
            if candidate in result.candidates or not candidate.is_involutive():
                continue
            if check_involution(candidate, h, q0):
                result.candidates.append(candidate)

    result.candidates = [_named(candidate) for candidate in _ordered(result.candidates)]

    representative = unit_circle_candidate(CScalar.i())
    if representative.is_involutive() and check_involution(representative, h, q0):
        result.complex_families.append(representative)
        result.note = UNIT_CIRCLE_NOTE

    logger.info(f"Found {len(result.candidates)} involutions for h={h}: "
                f"{[candidate.name for candidate in result.candidates]}")
    return result


def _ordered(candidates: List[InvolutionCandidate]) -> List[InvolutionCandidate]:
    """Deterministic order; -id sorts first."""
    def key(candidate):
        return tuple(str(entry) for row in candidate.J for entry in row)
    return sorted(candidates, key=key)


def _named(candidate: InvolutionCandidate) -> InvolutionCandidate:
    for known in (minus_identity(), split_involution()):
        if candidate.J == known.J:
            return known
    return candidate


# Extension to the algebra

def _split_relation(relation: WordPoly) -> Tuple[List[QScalar], List[QScalar], QScalar]:
    quadratic = [QScalar(0)] * 9
    linear = [QScalar(0)] * 3
    constant = QScalar(0)
    for word, coeff in relation.items():
        if len(word) == 2:
            quadratic[TENSOR_LABELS.index("".join(word))] = coeff
        elif len(word) == 1:
            linear[LETTERS.index(word[0])] = coeff
        else:
            constant = coeff
    return quadratic, linear, constant


def starred_relation(candidate: InvolutionCandidate, relation: WordPoly) -> Tuple[WordPoly, WordPoly]:
    """
    Real and imaginary parts of mu((* x *) S t2) + (t1)* + conj(t0) for a
    relation t2 + t1 + t0 with real coefficients.
    """
    Jr, Ji = candidate.real_part(), candidate.imaginary_part()
    KR = Jr.kron(Jr) - Ji.kron(Ji)
    KI = Jr.kron(Ji) + Ji.kron(Jr)
    quadratic, linear, constant = _split_relation(relation)
    braided = braiding_operator() @ QMatrix.column(quadratic)
    linear_column = QMatrix.column(linear)

    parts = []
    for K, Jpart in ((KR, Jr), (KI, Ji)):
        part: WordPoly = {}
        for index, coeff in enumerate((K @ braided).columns()[0]):
            add_into(part, tuple(TENSOR_LABELS[index]), coeff)
        for index, coeff in enumerate((Jpart @ linear_column).columns()[0]):
            add_into(part, (LETTERS[index],), coeff)
        parts.append(part)
    add_into(parts[0], (), constant)
    return parts[0], parts[1]


def check_extension_consistency(candidate: InvolutionCandidate, h: RationalLike,
                                c: RationalLike) -> bool:
    """The rule * mu = mu (* x *) S maps every defining relation of A_{h,q}^c into the ideal."""
    if not check_involution(candidate, h):
        raise InvolutionPreconditionError(f"{candidate.describe()} is not compatible with the bracket")
    cfg = AlgebraConfig.quotient(h=h, c=c)
    for name, relation in defining_relations(cfg).items():
        real, imaginary = starred_relation(candidate, relation)
        if not (reduce_poly(real, cfg).is_zero() and reduce_poly(imaginary, cfg).is_zero()):
            logger.info(f"Relation {name} is not *-stable under {candidate.describe()}")
            return False
    return True


# Odd and even parts

def _eigenspace_basis(candidate: InvolutionCandidate, sign: int) -> List[CVector]:
    """Real-linear basis of {z : z* = sign z}, z = x + i y."""
    Jr, Ji = candidate.real_part(), candidate.imaginary_part()
    identity = QMatrix.identity(3).scale(sign)
    system = (Jr - identity).hstack(Ji).vstack(Ji.hstack(-Jr - identity))
    return [
        tuple(CScalar(vector[k], vector[k + 3]) for k in range(3))
        for vector in system.nullspace()
    ]


def _in_eigenspace(candidate: InvolutionCandidate, z: Sequence[CScalar], sign: int) -> bool:
    return all(image == entry * sign for image, entry in zip(candidate.apply(z), z))


def odd_part_basis(candidate: InvolutionCandidate) -> List[CVector]:
    return _eigenspace_basis(candidate, -1)


def even_part_basis(candidate: InvolutionCandidate) -> List[CVector]:
    return _eigenspace_basis(candidate, 1)


def _closure_witness(candidate: InvolutionCandidate, h: RationalLike,
                     sign: int) -> Optional[Tuple[CVector, CVector]]:
    table = _bracket_table(Fraction(h), None)
    basis = _eigenspace_basis(candidate, sign)
    for a in basis:
        for b in basis:
            if not _in_eigenspace(candidate, complex_bracket(a, b, table), sign):
                return a, b
    return None


def check_odd_subalgebra(candidate: InvolutionCandidate, h: RationalLike) -> bool:
    """The odd part {z : z* = -z} is closed under the bracket."""
    return _closure_witness(candidate, h, -1) is None


def even_part_witness(candidate: InvolutionCandidate, h: RationalLike) -> Optional[Tuple[CVector, CVector]]:
    """A pair of even elements whose bracket is not even, or None when the even part is closed."""
    return _closure_witness(candidate, h, 1)
