"""
Quotient Algebra Package

Normal-form arithmetic in the algebra A_{h,q} generated by u, v, w and in its
quotient A_{h,q}^c by C_q = c, via a terminating rewriting system. Includes
the flatness checks (confluence and graded dimensions), the U_q(sl(2))
action on the algebra and braided commutativity of A_{0,q}^c.
"""

from .algebra import (
    act_on_word,
    action_residuals,
    casimir_centrality_residuals,
    casimir_word_poly,
    check_action_well_defined,
    check_braided_commutativity,
    braided_commutativity_failures,
    check_confluence,
    classical_dimension,
    graded_dimension,
    multiply,
    nfpoly_matrix,
    parse_word,
    reduce,
    reduce_poly,
    rep_consistency,
    require_action_well_defined,
    rewrite_system,
    to_word_poly,
    uq_act,
    word_matrix,
)
from .config import AlgebraConfig, AlgebraMode
from .data_structures import LETTERS, NFPoly, monomial_key, parse_monomial_key, word_of
from .exceptions import (
    QuotientAlgebraError,
    RuleDerivationError,
    SerializationError,
    WellDefinednessError,
)
from .rewriting import RewriteSystem, defining_relations, termination_measure, word_poly

__version__ = "1.0.0"

__all__ = [
    # Configuration
    'AlgebraConfig',
    'AlgebraMode',

    # Data structures
    'NFPoly',
    'LETTERS',
    'monomial_key',
    'parse_monomial_key',
    'word_of',

    # Rewriting
    'RewriteSystem',
    'defining_relations',
    'termination_measure',
    'word_poly',
    'rewrite_system',
    'parse_word',

    # Arithmetic
    'reduce',
    'reduce_poly',
    'multiply',
    'to_word_poly',

    # Flatness
    'check_confluence',
    'graded_dimension',
    'classical_dimension',

    # U_q action
    'act_on_word',
    'uq_act',
    'action_residuals',
    'check_action_well_defined',
    'require_action_well_defined',

    # Braided structure and representations
    'check_braided_commutativity',
    'braided_commutativity_failures',
    'casimir_word_poly',
    'casimir_centrality_residuals',
    'rep_consistency',
    'word_matrix',
    'nfpoly_matrix',

    # Exceptions
    'QuotientAlgebraError',
    'RuleDerivationError',
    'SerializationError',
    'WellDefinednessError',
]
