"""
Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Optional, Sequence

import yaml

from braided_core import BraidedCoreError
from qscalar import QScalarError
from quotient_algebra import QuotientAlgebraError
from spin_reps import SpinRepError
from trace_involution import TraceInvolutionError
from uq_modules import UqModuleError

from .commands import COMMANDS, render_text
from .config import LOG_LEVELS, OUTPUT_FORMATS, SUITES, HyperboloidConfig, RunConfig
from .data_models import ClaimStatus, ReportModel
from .exceptions import CliError
from .verification import cmd_verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_PARAMETER_ERROR = 2

PARAMETER_ERRORS = (
    CliError,
    QScalarError,
    UqModuleError,
    BraidedCoreError,
    SpinRepError,
    QuotientAlgebraError,
    TraceInvolutionError,
    ValueError,
)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format")
    common.add_argument("--q", type=Fraction, default=None, dest="q0",
                        help="Evaluate at this rational q (symbolic when omitted)")
    common.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, default=None)
    common.add_argument("--jobs", type=int, default=None, help="Worker count for verify")
    common.add_argument("--config", default=None, help="YAML file with a hyperboloid: section")
    common.add_argument("--env-file", default=None, help=".env file with HYPERBOLOID_* settings")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="hyperboloid",
        description="Exact computations for the braided Lie algebra sl(2)_q and the quantum hyperboloid.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    rep = sub.add_parser("rep", parents=[common], help="Spin-k braided representation matrices")
    rep.add_argument("--l", type=int, required=True)
    rep.add_argument("--h", type=Fraction, required=True)

    verify = sub.add_parser("verify", parents=[common], help="Run a verification suite")
    verify.add_argument("--suite", choices=SUITES, default="all")
    verify.add_argument("--lmax", type=int, default=None)
    verify.add_argument("--q-samples", default=None,
                        help="Comma-separated rational q values for numeric spot checks")

    trace = sub.add_parser("trace", parents=[common], help="Braided trace of v^m on A_{0,q}^c")
    trace.add_argument("--m", type=int, required=True)
    trace.add_argument("--c", required=True)
    trace.add_argument("--d", type=int, default=None, help="Degree bound (default m)")

    casimir = sub.add_parser("casimir", parents=[common], help="Casimir scalars and c_k for l = 1..lmax")
    casimir.add_argument("--lmax", type=int, default=3)
    casimir.add_argument("--h", type=Fraction, required=True)

    reduce = sub.add_parser("reduce", parents=[common], help="Normal form of a word in u, v, w")
    reduce.add_argument("--word", required=True)
    reduce.add_argument("--mode", choices=("enveloping", "quotient"), default="enveloping")
    reduce.add_argument("--h", type=Fraction, default=Fraction(0))
    reduce.add_argument("--c", default="0")
    return parser


def build_run_config(args: argparse.Namespace, settings: HyperboloidConfig) -> RunConfig:
    """Flags override settings; settings already carry YAML and environment values."""
    if args.subcommand == "verify":
        if args.lmax is not None:
            settings.verification.lmax = args.lmax
            settings.verification.__post_init__()
        if args.q_samples:
            settings.sampling.q_samples = [s.strip() for s in args.q_samples.split(",") if s.strip()]
            settings.sampling.__post_init__()

    return RunConfig(
        subcommand=args.subcommand,
        settings=settings,
        l=getattr(args, "l", 1),
        lmax=settings.verification.lmax if getattr(args, "lmax", None) is None else args.lmax,
        h=getattr(args, "h", Fraction(0)),
        c=getattr(args, "c", "0"),
        q0=args.q0,
        output_format=args.format or settings.output.format,
        m=getattr(args, "m", 0),
        d=getattr(args, "d", None),
        word=getattr(args, "word", ""),
        mode=getattr(args, "mode", "enveloping"),
        suite=getattr(args, "suite", "all"),
        jobs=args.jobs or settings.output.jobs,
    )


def configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT, stream=sys.stderr)


def execute(run: RunConfig) -> ReportModel:
    if run.subcommand == "verify":
        return cmd_verify(run.suite, run.settings, run.jobs)
    return COMMANDS[run.subcommand](run)


def emit(report: ReportModel, output_format: str, subcommand: str) -> None:
    if output_format == "json":
        print(report.model_dump_json(indent=2))
        return
    for line in render_text(report):
        print(line)
    if subcommand == "verify":
        counts = {status: 0 for status in ClaimStatus}
        for claim in report.claims:
            counts[claim.status] += 1
        print(", ".join(f"{count} {status.value}" for status, count in counts.items()))


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        settings = HyperboloidConfig.from_environment(args.config, args.env_file)
        run = build_run_config(args, settings)
    except (ValueError, FileNotFoundError, yaml.YAMLError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMETER_ERROR

    configure_logging(args.log_level or settings.output.log_level)
    logger.debug(f"Run configuration: {run}")

    try:
        report = execute(run)
    except PARAMETER_ERRORS as e:
        logger.error(f"{run.subcommand} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMETER_ERROR

    emit(report, run.output_format, run.subcommand)
    return EXIT_VERIFICATION_FAILED if report.failed else EXIT_OK
