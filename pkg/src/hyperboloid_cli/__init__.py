"""
Hyperboloid Command-Line Interface

Subcommands rep, trace, casimir and reduce expose the library computations
with exact (or, with --q, numeric) output; verify runs the claim suites and
reports each statement as pass, fail, paper-discrepancy or info.
"""

import os
import sys

# Add src directory to Python path for proper imports
src_path = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if src_path not in sys.path:
    sys.path.insert(0, src_path)

from .main import build_parser, main
from .commands import cmd_casimir, cmd_rep, cmd_reduce, cmd_trace, render_text
from .verification import SUITE_CLAIMS, cmd_verify, suite_claims
from .config import (
    HyperboloidConfig,
    OutputConfig,
    RunConfig,
    SamplingConfig,
    VerificationConfig,
)
from .data_models import ClaimModel, ClaimStatus, ReportModel
from .exceptions import CliError, ParameterError

__version__ = "1.0.0"

__all__ = [
    # Entry points
    'main',
    'build_parser',

    # Commands
    'cmd_rep',
    'cmd_trace',
    'cmd_casimir',
    'cmd_reduce',
    'cmd_verify',
    'render_text',
    'suite_claims',
    'SUITE_CLAIMS',

    # Configuration
    'HyperboloidConfig',
    'VerificationConfig',
    'SamplingConfig',
    'OutputConfig',
    'RunConfig',

    # Report models
    'ClaimModel',
    'ClaimStatus',
    'ReportModel',

    # Exceptions
    'CliError',
    'ParameterError',
]
