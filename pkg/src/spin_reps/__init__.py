"""
Spin-k Almost Representations

This package builds the almost representation (U, V, W) of the braided sl(2)
inside End(U_k), extracts its factor theta, computes the braided Casimir
scalar and the rescaled genuine representation with value c_k.
"""

from .braided_rep import (
    braided_module_value,
    build_braided_rep,
    casimir_commutes_with_action,
    casimir_formula,
    casimir_matrix,
    casimir_value,
    check_highest_weight,
    check_rescaled_relations,
    check_weights,
    classical_limit_holds,
    excluded_q_factors,
    first_entry_derivation,
    theta_formula,
    theta_real_zero_free,
    verify_unicity,
)
from .data_structures import BraidedRep
from .exceptions import NonScalarCasimirError, RepParameterError, SpinRepError, ThetaMismatchError

__all__ = [
    # Construction
    'build_braided_rep',
    'BraidedRep',

    # Values
    'casimir_value',
    'casimir_matrix',
    'casimir_formula',
    'braided_module_value',
    'theta_formula',

    # Checks
    'verify_unicity',
    'check_highest_weight',
    'check_weights',
    'check_rescaled_relations',
    'first_entry_derivation',
    'casimir_commutes_with_action',
    'classical_limit_holds',
    'theta_real_zero_free',
    'excluded_q_factors',

    # Exceptions
    'SpinRepError',
    'ThetaMismatchError',
    'NonScalarCasimirError',
    'RepParameterError',
]
