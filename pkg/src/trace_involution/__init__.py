"""
Trace and Involution Package

The braided trace on the quantum hyperboloid A_{0,q}^c by invariant
projection, the quantum trace on End(U_k) with its invariance contract, and
the classification and extension of involutions compatible with the q-Lie
bracket.
"""

from .braided_trace import (
    ad_invariance_residuals,
    braided_trace,
    build_invariant_projector,
    check_complement_spans,
    compare_trace_formula,
    invariant_projection,
    trace_formula_vm,
    trace_of_power,
)
from .quantum_trace import (
    check_invariance,
    invariance_residuals,
    passing_conventions,
    quantum_trace_end,
    select_convention,
    twist_matrix,
)
from .involutions import (
    check_extension_consistency,
    check_involution,
    check_odd_subalgebra,
    classify_involutions,
    compact_candidate,
    compatibility_equations,
    complex_bracket,
    even_part_basis,
    even_part_witness,
    involution_residuals,
    is_consistent,
    minus_identity,
    odd_part_basis,
    solve_compatibility,
    split_involution,
    starred_relation,
    unit_circle_candidate,
)
from .data_structures import (
    CVector,
    ExponentSign,
    InvariantProjector,
    InvolutionCandidate,
    InvolutionClassification,
    QTraceConvention,
    SolutionBranch,
    TraceComparison,
    render_cvector,
)
from .exceptions import (
    TraceInvolutionError,
    RankDeficiencyError,
    ConventionError,
    InvolutionPreconditionError,
    DegenerateParameterError,
)

__version__ = "1.0.0"

__all__ = [
    # Braided trace
    'braided_trace',
    'build_invariant_projector',
    'check_complement_spans',
    'invariant_projection',
    'trace_of_power',
    'trace_formula_vm',
    'compare_trace_formula',
    'ad_invariance_residuals',

    # Quantum trace
    'quantum_trace_end',
    'twist_matrix',
    'invariance_residuals',
    'check_invariance',
    'passing_conventions',
    'select_convention',

    # Involutions
    'check_involution',
    'involution_residuals',
    'classify_involutions',
    'solve_compatibility',
    'compatibility_equations',
    'is_consistent',
    'complex_bracket',
    'check_extension_consistency',
    'starred_relation',
    'check_odd_subalgebra',
    'odd_part_basis',
    'even_part_basis',
    'even_part_witness',
    'minus_identity',
    'split_involution',
    'compact_candidate',
    'unit_circle_candidate',

    # Data structures
    'CVector',
    'ExponentSign',
    'InvariantProjector',
    'InvolutionCandidate',
    'InvolutionClassification',
    'QTraceConvention',
    'SolutionBranch',
    'TraceComparison',
    'render_cvector',

    # Exceptions
    'TraceInvolutionError',
    'RankDeficiencyError',
    'ConventionError',
    'InvolutionPreconditionError',
    'DegenerateParameterError',
]
