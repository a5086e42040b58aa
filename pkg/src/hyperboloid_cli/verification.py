"""
The verify subcommand: every checkable statement about sl(2)_q, the
hyperboloid and its trace and involutions, as an ordered list of claims.

Claims are independent, so they may run on a thread pool; the report keeps
the registration order. A claim that raises is reported as a failure.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from braided_core import (
    T,
    antisymmetry_defect,
    braiding_operator,
    check_almost_jacobi,
    check_bracket_equivariance,
    check_bracket_supported_on_v1,
    check_generalized_lie,
    check_highest_weight_vectors,
    check_projectors,
    flip_operator,
    qlie_bracket,
)
from qscalar import QMatrix, QScalar, q
from quotient_algebra import (
    AlgebraConfig,
    LETTERS,
    NFPoly,
    braided_commutativity_failures,
    casimir_centrality_residuals,
    check_action_well_defined,
    check_confluence,
    classical_dimension,
    graded_dimension,
    rep_consistency,
    rewrite_system,
)
from spin_reps import (
    braided_module_value,
    build_braided_rep,
    casimir_commutes_with_action,
    casimir_formula,
    casimir_value,
    check_highest_weight,
    check_weights,
    classical_limit_holds,
    theta_formula,
    verify_unicity,
)
from trace_involution import (
    ad_invariance_residuals,
    build_invariant_projector,
    check_complement_spans,
    check_extension_consistency,
    check_invariance,
    check_involution,
    check_odd_subalgebra,
    classify_involutions,
    compact_candidate,
    compare_trace_formula,
    even_part_witness,
    minus_identity,
    render_cvector,
    select_convention,
    split_involution,
    trace_of_power,
)
from uq_modules import build_spin_module, check_antipode, check_endo_module_relations, check_uq_relations

from .config import HyperboloidConfig
from .data_models import ClaimModel, ClaimStatus, ReportModel

logger = logging.getLogger(__name__)

Outcome = Tuple[ClaimStatus, str]
ClaimCheck = Callable[[HyperboloidConfig], Outcome]

# h used wherever a statement needs one nonzero value
H = Fraction(2)

# End(U) has dimension (l+1)^2; unicity is solved symbolically up to this l
UNICITY_LMAX = 4


def _status(ok: bool) -> ClaimStatus:
    return ClaimStatus.PASS if ok else ClaimStatus.FAIL


def _failing(label: str, items: List) -> Outcome:
    if items:
        return ClaimStatus.FAIL, f"{label} fails for {items}"
    return ClaimStatus.PASS, ""


# Spin modules and representations

def claim_uq_relations(settings: HyperboloidConfig) -> Outcome:
    lmax = settings.verification.lmax
    failing = [l for l in range(lmax + 1) if not check_uq_relations(build_spin_module(l))]
    status, note = _failing("U_q relations", failing)
    return status, note or f"l = 0..{lmax}"


def claim_endo_module(settings: HyperboloidConfig) -> Outcome:
    lmax = min(settings.verification.lmax, 3)
    failing = []
    for l in range(1, lmax + 1):
        module = build_spin_module(l)
        if not (check_endo_module_relations(module) and check_antipode(module)):
            failing.append(l)
    status, note = _failing("End(U) module structure", failing)
    return status, note or f"rho_End and antipode identities for l = 1..{lmax}"


def claim_unicity(settings: HyperboloidConfig) -> Outcome:
    lmax = min(settings.verification.lmax, UNICITY_LMAX)
    samples = [Fraction(s) for s in settings.sampling.q_samples]
    failing = [
        l for l in range(1, lmax + 1)
        if not (verify_unicity(l) and verify_unicity(l, samples))
    ]
    status, note = _failing("unicity", failing)
    return status, note or f"one weight-2 highest-weight vector in End(U) for l = 1..{lmax}"


def claim_golden_l1(settings: HyperboloidConfig) -> Outcome:
    rep = build_braided_rep(1, H)
    printed = {
        'U': QMatrix([[0, 1], [0, 0]]),
        'V': QMatrix.diag([QScalar.q_power(-1), -q]),
        'W': QMatrix.subdiag([QScalar.q_power(-1)]),
    }
    computed = {'U': rep.U.matrix, 'V': rep.V.matrix, 'W': rep.W.matrix}
    failing = [name for name in printed if computed[name] != printed[name]]
    return _failing("printed l=1 matrix", failing)


def claim_golden_l2(settings: HyperboloidConfig) -> Outcome:
    rep = build_braided_rep(2, H)
    U = QMatrix([[0, QScalar.q_power(2), 0], [0, 0, 1], [0, 0, 0]])
    V = QMatrix.diag([1, 1 - QScalar.q_power(2), -QScalar.q_power(2)]).scale(T)
    W_printed = QMatrix.subdiag([1, 1])
    if rep.U.matrix != U or rep.V.matrix != V:
        return ClaimStatus.FAIL, "U or V differs from the printed l=2 matrices"
    if rep.W.matrix == W_printed:
        return ClaimStatus.PASS, ""
    if rep.W.matrix == W_printed.scale(T):
        return (ClaimStatus.PAPER_DISCREPANCY,
                "W = (q+q^-1)*subdiag(1,1); the printed subdiag(1,1) drops the factor (q+q^-1)")
    return ClaimStatus.FAIL, f"W = {rep.W.matrix.to_strings()}"


def claim_theta(settings: HyperboloidConfig) -> Outcome:
    lmax = settings.verification.lmax
    failing = [l for l in range(1, lmax + 1) if build_braided_rep(l, H).theta != theta_formula(l)]
    status, note = _failing("theta = q^(2l+1) + q^-1", failing)
    return status, note or f"one theta for all three relations, l = 1..{lmax}"


def claim_weights(settings: HyperboloidConfig) -> Outcome:
    failing = []
    for l in range(1, settings.verification.lmax + 1):
        rep = build_braided_rep(l, H)
        if not (check_highest_weight(rep) and check_weights(rep)):
            failing.append(l)
    return _failing("weights 2, 0, -2", failing)


def claim_casimir(settings: HyperboloidConfig) -> Outcome:
    failing = []
    for l in range(1, settings.verification.lmax + 1):
        rep = build_braided_rep(l, H)
        if casimir_value(rep) != casimir_formula(l) or not casimir_commutes_with_action(rep):
            failing.append(l)
    status, note = _failing("Casimir = b_l b_(l+2) q^(2l-2)", failing)
    return status, note or "scalar and invariant"


def claim_module_value(settings: HyperboloidConfig) -> Outcome:
    verification = settings.verification
    for h in verification.ck_h_values:
        for l in range(1, verification.ck_lmax + 1):
            braided_module_value(l, Fraction(h))
    classical = [braided_module_value(l, H, cross_check=False).eval_at(1)
                 for l in range(1, verification.ck_lmax + 1)]
    expected = [4 * l * (l + 2) for l in range(1, verification.ck_lmax + 1)]
    if classical != expected:
        return ClaimStatus.FAIL, f"c_k at q=1, h=2 is {[str(v) for v in classical]}"
    return ClaimStatus.PASS, "c_k at q=1, h=2: " + ", ".join(str(v) for v in classical)


def claim_classical_rep(settings: HyperboloidConfig) -> Outcome:
    failing = [l for l in range(1, settings.verification.lmax + 1)
               if not classical_limit_holds(build_braided_rep(l, H))]
    return _failing("classical sl(2) relations at q=1", failing)


# Braided structure and the algebra

def claim_bracket(settings: HyperboloidConfig) -> Outcome:
    ok = check_bracket_equivariance(H) and check_bracket_supported_on_v1(H)
    return _status(ok), "equivariant and supported on V_1"


def claim_tensor_square(settings: HyperboloidConfig) -> Outcome:
    return _status(check_projectors() and check_highest_weight_vectors()), "V x V = V_0 + V_1 + V_2"


def claim_classical_limits(settings: HyperboloidConfig) -> Outcome:
    if braiding_operator().eval_at(1) != flip_operator():
        return ClaimStatus.FAIL, "braiding at q=1 is not the flip"
    if any(entry.eval_at(1) != 0 for entry in antisymmetry_defect(H)):
        return ClaimStatus.FAIL, "bracket at q=1 is not antisymmetric"

    u, v, w = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    # sl(2) table at q=1, h=2: [u,v] = -2u, [u,w] = v, [v,w] = -2w
    expected = {(u, v): (-2, 0, 0), (u, w): (0, 1, 0), (v, w): (0, 0, -2)}
    for (a, b), value in expected.items():
        if tuple(entry.eval_at(1) for entry in qlie_bracket(a, b, H)) != value:
            return ClaimStatus.FAIL, f"bracket at q=1 differs from sl(2) on {a}, {b}"
    return ClaimStatus.PASS, "flip braiding and sl(2) table at q=1"


def claim_generalized_lie(settings: HyperboloidConfig) -> Outcome:
    failing = [
        (str(h), str(c)) for h, c in ((2, 5), (1, 0), (0, 3))
        if not check_generalized_lie(h, c).all_hold
    ]
    status, note = _failing("conditions a, b, c", failing)
    return status, note or "(h, c) in (2, 5), (1, 0), (0, 3)"


def claim_almost_jacobi(settings: HyperboloidConfig) -> Outcome:
    result = check_almost_jacobi(H)
    if not result.found:
        return ClaimStatus.FAIL, f"no common factor: {result.failing_relations}"
    if result.lie_normalized_nu.eval_at(1) != 1 or not result.rescaled_is_representation:
        return ClaimStatus.FAIL, f"nu = {result.nu}"
    return ClaimStatus.PASS, f"nu = {result.nu}, 2*nu = 1 at q=1"


def _configs() -> List[AlgebraConfig]:
    return [AlgebraConfig.enveloping(H), AlgebraConfig.quotient(H, 5)]


def claim_confluence(settings: HyperboloidConfig) -> Outcome:
    max_len = settings.verification.confluence_max_len
    failing = [cfg.mode.value for cfg in _configs() if not check_confluence(cfg, max_len)]
    status, note = _failing("confluence", failing)
    return status, note or f"words of length <= {max_len}, both modes"


def claim_termination(settings: HyperboloidConfig) -> Outcome:
    failing = [cfg.mode.value for cfg in _configs()
               if not rewrite_system(cfg).check_termination_order()]
    return _failing("termination order", failing)


def claim_graded_dimension(settings: HyperboloidConfig) -> Outcome:
    dmax = settings.verification.graded_dmax
    failing = [
        (cfg.mode.value, d) for cfg in _configs() for d in range(dmax + 1)
        if graded_dimension(cfg, d) != classical_dimension(cfg, d)
    ]
    status, note = _failing("graded dimension", failing)
    return status, note or f"(d+1)(d+2)/2 and 2d+1 for d <= {dmax}"


def claim_action(settings: HyperboloidConfig) -> Outcome:
    failing = [cfg.mode.value for cfg in _configs() if not check_action_well_defined(cfg)]
    return _failing("U_q action on the ideal", failing)


def random_words(settings: HyperboloidConfig) -> List[str]:
    sampling = settings.sampling
    rng = random.Random(sampling.seed)
    return [
        "".join(rng.choice(LETTERS) for _ in range(rng.randint(1, sampling.max_word_length)))
        for _ in range(sampling.random_words)
    ]


def claim_rep_consistency(settings: HyperboloidConfig) -> Outcome:
    words = random_words(settings)
    failing = []
    for l in (1, 2):
        rep = build_braided_rep(l, H)
        for cfg in (AlgebraConfig.enveloping(H), AlgebraConfig.quotient(H, rep.c_k)):
            failing.extend((l, cfg.mode.value, word) for word in words if not rep_consistency(rep, word, cfg))
    status, note = _failing("matrix image of the normal form", failing[:5])
    return status, note or f"{len(words)} random words, l = 1, 2, both modes"


def claim_braided_commutativity(settings: HyperboloidConfig) -> Outcome:
    c = Fraction(settings.verification.involution_c)
    symmetric = braided_commutativity_failures(c, 0)
    if symmetric:
        return ClaimStatus.FAIL, f"mu S != mu at h = 0 on {symmetric}"
    counterexample = braided_commutativity_failures(c, H)
    if not counterexample:
        return ClaimStatus.FAIL, "no counterexample at h != 0"
    return ClaimStatus.PASS, f"holds at h = 0; fails at h = {H} on {counterexample}"


def claim_casimir_centrality(settings: HyperboloidConfig) -> Outcome:
    residuals = casimir_centrality_residuals(AlgebraConfig.enveloping(H))
    noncentral = {letter: str(r) for letter, r in residuals.items() if not r.is_zero()}
    if noncentral:
        return ClaimStatus.INFO, f"C_q z - z C_q in A_(h,q): {noncentral}"
    return ClaimStatus.INFO, "C_q is central in A_(h,q)"


# Traces

def claim_trace_values(settings: HyperboloidConfig) -> Outcome:
    failing = []
    for c in settings.verification.trace_c_values:
        c = Fraction(c)
        for m in settings.verification.trace_powers:
            value = trace_of_power(m, c, q0=1)
            # spherical average of z^m on x^2 + y^2 + z^2 = c
            expected = 0 if m % 2 else c ** (m // 2) / (m + 1)
            if value != QScalar(Fraction(expected)):
                failing.append((m, str(c), str(value)))
    status, note = _failing("tr(v^m) at q=1", failing)
    return status, note or "tr(v^m) = c^(m/2)/(m+1) for even m, 0 for odd m"


def claim_trace_invariance(settings: HyperboloidConfig) -> Outcome:
    c = Fraction(settings.verification.involution_c)
    if not check_complement_spans(build_invariant_projector(2, c)):
        return ClaimStatus.FAIL, "complement and unit do not span the degree <= 2 part"
    residuals = ad_invariance_residuals(NFPoly.monomial((0, 2, 0)), c)
    if any(not r.is_zero() for r in residuals):
        return ClaimStatus.FAIL, f"tr(g.v^2) = {[str(r) for r in residuals]}"
    return ClaimStatus.PASS, "tr vanishes on X, Y, H images"


def _formula_claim(m: int) -> ClaimCheck:
    def check(settings: HyperboloidConfig) -> Outcome:
        comparison = compare_trace_formula(m, QScalar(Fraction(settings.verification.involution_c)))
        if comparison.matches_minus:
            return ClaimStatus.PASS, "projection matches the printed q^(-m) c^(-m/2) formula"
        if comparison.matches_plus:
            return (ClaimStatus.PAPER_DISCREPANCY,
                    f"tr(v^{m}) = {comparison.projection} matches q^(+m) c^(+m/2); the printed exponent sign is negative")
        return ClaimStatus.FAIL, f"tr(v^{m}) = {comparison.projection} matches neither formula"
    return check


def claim_quantum_trace(settings: HyperboloidConfig) -> Outcome:
    lmax = settings.verification.quantum_trace_lmax
    conventions = {}
    for l in range(1, lmax + 1):
        convention = select_convention(l)
        if not check_invariance(l, convention):
            return ClaimStatus.FAIL, f"Tr_q not invariant on End(U) for l={l}"
        conventions[l] = convention.value
    return ClaimStatus.PASS, f"Tr(M {sorted(set(conventions.values()))[0]}) for l = 1..{lmax}"


# Involutions

def _h(settings: HyperboloidConfig) -> Fraction:
    return Fraction(settings.verification.involution_h)


def claim_named_involutions(settings: HyperboloidConfig) -> Outcome:
    h = _h(settings)
    if not (check_involution(minus_identity(), h) and check_involution(split_involution(), h)):
        return ClaimStatus.FAIL, "-id or diag(1,-1,1) is not compatible"
    if check_involution(compact_candidate(), h):
        return ClaimStatus.FAIL, "the compact antidiagonal map is compatible at generic q"
    return ClaimStatus.PASS, "-id and diag(1,-1,1) compatible; antidiagonal rejected"


def claim_classification(settings: HyperboloidConfig) -> Outcome:
    result = classify_involutions(_h(settings))
    names = [candidate.name for candidate in result.candidates]
    note = f"{len(names)} real involutions found: {names}"
    if result.note:
        note += f"; {result.note}"
    return _status(len(names) == 2), note


def claim_extension(settings: HyperboloidConfig) -> Outcome:
    h, c = _h(settings), Fraction(settings.verification.involution_c)
    failing = [candidate.name for candidate in (minus_identity(), split_involution())
               if not check_extension_consistency(candidate, h, c)]
    return _failing("extension to A_(h,q)^c", failing)


def claim_odd_closure(settings: HyperboloidConfig) -> Outcome:
    failing = [candidate.name for candidate in (minus_identity(), split_involution())
               if not check_odd_subalgebra(candidate, _h(settings))]
    return _failing("odd part closure", failing)


def claim_even_witness(settings: HyperboloidConfig) -> Outcome:
    witness = even_part_witness(split_involution(), _h(settings))
    if witness is None:
        return ClaimStatus.INFO, "even part of diag(1,-1,1) is closed"
    a, b = witness
    return ClaimStatus.INFO, f"even part not closed: [{render_cvector(a)}, {render_cvector(b)}] is not even"


SUITE_CLAIMS: Dict[str, List[Tuple[str, ClaimCheck]]] = {
    "reps": [
        ("reps.uq_relations", claim_uq_relations),
        ("reps.endo_module", claim_endo_module),
        ("reps.unicity", claim_unicity),
        ("reps.golden_l1", claim_golden_l1),
        ("reps.golden_l2", claim_golden_l2),
        ("reps.theta", claim_theta),
        ("reps.weights", claim_weights),
        ("reps.casimir", claim_casimir),
        ("reps.module_value", claim_module_value),
        ("reps.classical_limit", claim_classical_rep),
    ],
    "algebra": [
        ("algebra.bracket", claim_bracket),
        ("algebra.tensor_square", claim_tensor_square),
        ("algebra.classical_limits", claim_classical_limits),
        ("algebra.generalized_lie", claim_generalized_lie),
        ("algebra.almost_jacobi", claim_almost_jacobi),
        ("algebra.confluence", claim_confluence),
        ("algebra.termination", claim_termination),
        ("algebra.graded_dimension", claim_graded_dimension),
        ("algebra.action", claim_action),
        ("algebra.rep_consistency", claim_rep_consistency),
        ("algebra.braided_commutativity", claim_braided_commutativity),
        ("algebra.casimir_centrality", claim_casimir_centrality),
    ],
    "trace": [
        ("trace.values", claim_trace_values),
        ("trace.invariance", claim_trace_invariance),
        ("trace.formula_m2", _formula_claim(2)),
        ("trace.formula_m4", _formula_claim(4)),
        ("trace.quantum", claim_quantum_trace),
    ],
    "involutions": [
        ("involutions.named", claim_named_involutions),
        ("involutions.classification", claim_classification),
        ("involutions.extension", claim_extension),
        ("involutions.odd_closure", claim_odd_closure),
        ("involutions.even_witness", claim_even_witness),
    ],
}


def suite_claims(suite: str) -> List[Tuple[str, ClaimCheck]]:
    if suite == "all":
        return [claim for claims in SUITE_CLAIMS.values() for claim in claims]
    return list(SUITE_CLAIMS[suite])


def run_claim(claim_id: str, check: ClaimCheck, settings: HyperboloidConfig) -> ClaimModel:
    try:
        status, note = check(settings)
    except Exception as e:
        logger.error(f"Claim {claim_id} raised {type(e).__name__}: {e}")
        status, note = ClaimStatus.FAIL, f"{type(e).__name__}: {e}"
    if status is ClaimStatus.FAIL:
        logger.warning(f"Claim {claim_id} failed: {note}")
    else:
        logger.info(f"Claim {claim_id}: {status.value}")
    return ClaimModel(id=claim_id, status=status, note=note)


def cmd_verify(suite: str, settings: HyperboloidConfig, jobs: int = 1) -> ReportModel:
    """Run a suite; claims are reported in registration order whatever the worker count."""
    claims = suite_claims(suite)
    logger.info(f"Running {len(claims)} claims of suite {suite!r} on {jobs} worker(s)")
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(run_claim, claim_id, check, settings) for claim_id, check in claims]
        results = [future.result() for future in futures]
    return ReportModel(claims=results)
