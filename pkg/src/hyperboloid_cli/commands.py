"""
Subcommands rep, trace, casimir and reduce.

Each command turns a RunConfig into a ReportModel; rendering to text or JSON
happens in main. With q0 set, every scalar and matrix is evaluated at q = q0.
"""

import logging
from typing import Callable, Dict, List

from qscalar import QMatrix, QScalar, ScalarParseError
from quotient_algebra import AlgebraConfig, NFPoly, reduce
from spin_reps import (
    braided_module_value,
    build_braided_rep,
    casimir_formula,
    excluded_q_factors,
    theta_formula,
    theta_real_zero_free,
)
from trace_involution import TraceComparison, braided_trace, compare_trace_formula

from .config import RunConfig
from .data_models import ClaimModel, ClaimStatus, ReportModel
from .exceptions import ParameterError

logger = logging.getLogger(__name__)


def parse_scalar(text: str, name: str) -> QScalar:
    try:
        return QScalar.parse(str(text))
    except ScalarParseError as e:
        raise ParameterError(f"Invalid value for {name}: {text!r}") from e


def _scalar(value: QScalar, run: RunConfig) -> str:
    return str(value.eval_at(run.q0)) if run.numeric else str(value)


def _matrix(matrix: QMatrix, run: RunConfig) -> QMatrix:
    return matrix.eval_at(run.q0) if run.numeric else matrix


def cmd_rep(run: RunConfig) -> ReportModel:
    """Raw and rescaled U, V, W with theta, the Casimir scalar and c_k."""
    if run.l < 1:
        raise ParameterError(f"rep needs l >= 1, got {run.l}")
    if run.h == 0:
        raise ParameterError("rep needs h != 0")

    rep = build_braided_rep(run.l, run.h)
    report = ReportModel()
    for name, matrix in rep.matrices().items():
        report.add_matrix(name, _matrix(matrix, run))
    for name, value in rep.scalars().items():
        report.add_scalar(name, _scalar(value, run))

    theta_ok = rep.theta == theta_formula(run.l)
    report.claims.append(ClaimModel(
        id="rep.theta_formula",
        status=ClaimStatus.PASS if theta_ok else ClaimStatus.FAIL,
        note=f"theta = q^{2 * run.l + 1} + q^-1",
    ))
    report.claims.append(ClaimModel(
        id="rep.theta_real_zeros",
        status=ClaimStatus.INFO,
        note="theta has no real zeros" if theta_real_zero_free(run.l) else "theta vanishes at a real q",
    ))
    factors = excluded_q_factors(rep)
    report.claims.append(ClaimModel(
        id="rep.excluded_q",
        status=ClaimStatus.INFO,
        note="denominator factors: " + (", ".join(factors) if factors else "none"),
    ))
    return report


def cmd_trace(run: RunConfig) -> ReportModel:
    """tr_q(v^m) by invariant projection, compared with both closed-form conventions."""
    if run.m < 0:
        raise ParameterError(f"trace needs m >= 0, got {run.m}")
    if run.d is not None and run.d < run.m:
        raise ParameterError(f"Degree bound d={run.d} is below m={run.m}")
    c = parse_scalar(run.c, "c")

    comparison = compare_trace_formula(run.m, c, run.q0)
    report = ReportModel()
    report.add_scalar("trace", comparison.projection)
    report.add_scalar("formula_plus", comparison.formula_plus)
    if comparison.formula_minus is not None:
        report.add_scalar("formula_minus", comparison.formula_minus)
    if run.d is not None and run.d > run.m:
        report.add_scalar(
            f"trace_d{run.d}",
            braided_trace(NFPoly.monomial((0, run.m, 0)), c, d=run.d, q0=run.q0),
        )

    report.claims.append(ClaimModel(
        id="trace.convention", status=ClaimStatus.INFO, note=convention_note(comparison),
    ))
    return report


def convention_note(comparison: TraceComparison) -> str:
    if comparison.matches_plus and comparison.matches_minus:
        return "both exponent conventions agree here"
    if comparison.matches_plus:
        return "matches the q^(+m) c^(+m/2) convention"
    if comparison.matches_minus:
        return "matches the q^(-m) c^(-m/2) convention"
    return "matches neither closed-form convention"


def cmd_casimir(run: RunConfig) -> ReportModel:
    """Casimir scalar b_l b_{l+2} q^{2l-2} and c_k for l = 1..lmax."""
    if run.lmax < 1:
        raise ParameterError(f"casimir needs lmax >= 1, got {run.lmax}")
    report = ReportModel()
    for l in range(1, run.lmax + 1):
        report.add_scalar(f"casimir[l={l}]", _scalar(casimir_formula(l), run))
        report.add_scalar(f"c_k[l={l}]", _scalar(braided_module_value(l, run.h), run))
    return report


def cmd_reduce(run: RunConfig) -> ReportModel:
    """Normal form of a word; scalars are keyed by monomial."""
    try:
        cfg = AlgebraConfig(h=run.h, c=parse_scalar(run.c, "c"), mode=run.mode)
    except ValueError as e:
        raise ParameterError(str(e)) from e

    normal_form = reduce(run.word, cfg)
    if run.numeric:
        normal_form = NFPoly({
            exponents: QScalar(coeff.eval_at(run.q0)) for exponents, coeff in normal_form.items()
        })
    report = ReportModel(scalars=normal_form.to_json())
    report.claims.append(ClaimModel(
        id="reduce.normal_form", status=ClaimStatus.INFO, note=normal_form.render(),
    ))
    return report


COMMANDS: Dict[str, Callable[[RunConfig], ReportModel]] = {
    "rep": cmd_rep,
    "trace": cmd_trace,
    "casimir": cmd_casimir,
    "reduce": cmd_reduce,
}


def render_text(report: ReportModel) -> List[str]:
    """Plain-text rendering: matrices, then "name = value", then claims."""
    lines = []
    for name, grid in report.matrices.items():
        lines.append(f"{name} =")
        lines.extend("  [" + ", ".join(row) + "]" for row in grid)
    for name, value in report.scalars.items():
        lines.append(f"{name} = {value}")
    for claim in report.claims:
        lines.append(f"[{claim.status.value}] {claim.id}: {claim.note}".rstrip(": "))
    return lines
