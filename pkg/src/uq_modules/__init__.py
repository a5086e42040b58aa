"""
U_q(sl(2)) Modules

This package builds the spin-k irreducible representations of U_q(sl(2))
and the induced action rho_End on endomorphism spaces, together with the
checks that these are genuine module structures.
"""

from .spin_module import build_spin_module, check_uq_relations, relation_residuals, spin_weights
from .endomorphisms import (
    COPRODUCT,
    GROUPLIKE,
    iterated_coproduct,
    rho,
    rho_antipode,
    check_antipode,
    check_endo_module_relations,
    check_endo_multiplicativity,
    elementary_basis,
    endo_action,
    endo_operator,
    endo_qpower,
    highest_weight_kernel,
    highest_weight_kernel_dimension,
)
from .data_structures import EndoElement, Generator, SpinModule
from .exceptions import DimensionMismatchError, InvalidModuleError, UqModuleError

__all__ = [
    # Construction
    'build_spin_module',
    'spin_weights',

    # Checks
    'check_uq_relations',
    'relation_residuals',
    'check_endo_multiplicativity',
    'check_endo_module_relations',
    'check_antipode',

    # Endomorphism action
    'COPRODUCT',
    'GROUPLIKE',
    'iterated_coproduct',
    'rho',
    'rho_antipode',
    'endo_action',
    'endo_qpower',
    'endo_operator',
    'elementary_basis',
    'highest_weight_kernel',
    'highest_weight_kernel_dimension',

    # Data structures
    'SpinModule',
    'EndoElement',
    'Generator',

    # Exceptions
    'UqModuleError',
    'DimensionMismatchError',
    'InvalidModuleError',
]
