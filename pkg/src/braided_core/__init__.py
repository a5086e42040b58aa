"""
Braided sl(2) Core

This package holds the 3-dimensional module V, the decomposition of V x V,
the involutive braiding S, the q-Lie bracket and the generalized Lie
structure and almost-Jacobi checks built on them.
"""

from .vmodule import T, build_v_module, tensor_power_action
from .tensor_square import (
    braiding_operator,
    casimir_tensor,
    check_highest_weight_vectors,
    check_projectors,
    decompose_tensor_square,
    flip_operator,
    highest_weight_vectors,
    projector_residuals,
    tensor_vector,
)
from .bracket import (
    adjoint_matrices,
    antisymmetry_defect,
    bracket_coefficient,
    bracket_matrix,
    check_almost_jacobi,
    check_bracket_equivariance,
    check_bracket_supported_on_v1,
    qlie_bracket,
    qlie_bracket_table,
)
from .relations import definition_residuals, extract_factor, holds_with_factor, relation_lhs
from .generalized_lie import check_gen_lie_data, check_generalized_lie, generalized_lie_data
from .data_structures import (
    TENSOR_LABELS,
    V_LABELS,
    AlmostJacobiResult,
    GenLieData,
    GenLieReport,
    QLieBracket,
    TensorSquare,
    VModule,
    VVector,
)
from .exceptions import BraidedCoreError, ProjectorError

__all__ = [
    # Module V and tensor powers
    'T',
    'build_v_module',
    'tensor_power_action',

    # Tensor square
    'decompose_tensor_square',
    'braiding_operator',
    'casimir_tensor',
    'tensor_vector',
    'highest_weight_vectors',
    'check_highest_weight_vectors',
    'check_projectors',
    'projector_residuals',
    'flip_operator',

    # Bracket
    'qlie_bracket',
    'qlie_bracket_table',
    'bracket_coefficient',
    'bracket_matrix',
    'adjoint_matrices',
    'antisymmetry_defect',
    'check_bracket_equivariance',
    'check_bracket_supported_on_v1',
    'check_almost_jacobi',

    # Relations
    'relation_lhs',
    'definition_residuals',
    'holds_with_factor',
    'extract_factor',

    # Generalized Lie structure
    'generalized_lie_data',
    'check_gen_lie_data',
    'check_generalized_lie',

    # Data structures
    'V_LABELS',
    'TENSOR_LABELS',
    'VVector',
    'VModule',
    'TensorSquare',
    'QLieBracket',
    'GenLieData',
    'GenLieReport',
    'AlmostJacobiResult',

    # Exceptions
    'BraidedCoreError',
    'ProjectorError',
]
