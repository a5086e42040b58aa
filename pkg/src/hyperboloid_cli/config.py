"""
Configuration management for the hyperboloid command-line interface.

Settings are layered: defaults, then the `hyperboloid:` section of a YAML
file, then HYPERBOLOID_* environment variables (optionally from a .env
file), then command-line flags.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

# Import dotenv with fallback for environments where it's not available
try:
    from dotenv import load_dotenv
    DOTENV_AVAILABLE = True
except ImportError:
    DOTENV_AVAILABLE = False

    def load_dotenv(*args, **kwargs):
        """Fallback function when python-dotenv is not available."""
        pass


LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
OUTPUT_FORMATS = ("text", "json")
SUITES = ("all", "reps", "algebra", "trace", "involutions")


@dataclass
class VerificationConfig:
    """Ranges covered by the verify suites."""
    lmax: int = 8
    ck_lmax: int = 6
    ck_h_values: List[str] = field(default_factory=lambda: ["1", "2", "7/3"])
    confluence_max_len: int = 3
    graded_dmax: int = 6
    trace_powers: List[int] = field(default_factory=lambda: [0, 1, 2, 4])
    trace_c_values: List[str] = field(default_factory=lambda: ["1", "5"])
    quantum_trace_lmax: int = 4
    involution_h: str = "2"
    involution_c: str = "5"

    def __post_init__(self):
        if self.lmax < 1:
            raise ValueError(f"lmax must be >= 1, got {self.lmax}")
        if self.ck_lmax < 1:
            raise ValueError(f"ck_lmax must be >= 1, got {self.ck_lmax}")
        if self.confluence_max_len < 3:
            raise ValueError(f"confluence_max_len must be >= 3, got {self.confluence_max_len}")
        if self.graded_dmax < 0:
            raise ValueError(f"graded_dmax must be >= 0, got {self.graded_dmax}")
        if any(m < 0 for m in self.trace_powers):
            raise ValueError(f"trace_powers must be nonnegative, got {self.trace_powers}")
        if self.quantum_trace_lmax < 1:
            raise ValueError(f"quantum_trace_lmax must be >= 1, got {self.quantum_trace_lmax}")
        if Fraction(self.involution_h) == 0:
            raise ValueError("involution_h must be nonzero")


@dataclass
class SamplingConfig:
    """Random word sampling and numeric spot checks."""
    random_words: int = 100
    max_word_length: int = 5
    seed: int = 20240607
    q_samples: List[str] = field(default_factory=lambda: ["2", "3", "1/2"])

    def __post_init__(self):
        if self.random_words < 0:
            raise ValueError(f"random_words must be >= 0, got {self.random_words}")
        if self.max_word_length < 1:
            raise ValueError(f"max_word_length must be >= 1, got {self.max_word_length}")
        if any(Fraction(sample) == 0 for sample in self.q_samples):
            raise ValueError("q_samples must be nonzero")


@dataclass
class OutputConfig:
    """Rendering, logging and worker settings."""
    format: str = "text"
    log_level: str = "WARNING"
    jobs: int = 1

    def __post_init__(self):
        self.log_level = self.log_level.upper()
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"Invalid log level: {self.log_level}")
        if self.format not in OUTPUT_FORMATS:
            raise ValueError(f"Invalid output format: {self.format}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")


@dataclass
class HyperboloidConfig:
    """Main configuration for the hyperboloid CLI."""

    verification: VerificationConfig = field(default_factory=VerificationConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    @classmethod
    def create_default(cls) -> 'HyperboloidConfig':
        """Create a default configuration."""
        return cls()

    @classmethod
    def from_dict(cls, config_data: Optional[Dict[str, Any]]) -> 'HyperboloidConfig':
        """Create configuration from the parsed YAML document."""
        section = (config_data or {}).get('hyperboloid', {}) or {}
        return cls(
            verification=VerificationConfig(**section.get('verification', {})),
            sampling=SamplingConfig(**section.get('sampling', {})),
            output=OutputConfig(**section.get('output', {})),
        )

    @classmethod
    def from_yaml(cls, config_path: str) -> 'HyperboloidConfig':
        """
        Load configuration from a YAML file.

        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: If a value fails validation
        """
        config_file = Path(config_path)
        if not config_file.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")
        with open(config_file, 'r') as f:
            config_data = yaml.safe_load(f)
        return cls.from_dict(config_data)

    @staticmethod
    def load_environment_variables(env_file_path: Optional[str] = None) -> None:
        """Load HYPERBOLOID_* variables from a .env file when python-dotenv is installed."""
        if not DOTENV_AVAILABLE:
            return
        env_path = Path(env_file_path or ".env")
        if env_path.exists():
            load_dotenv(env_path)

    def apply_environment(self) -> 'HyperboloidConfig':
        """Override settings from HYPERBOLOID_LOG_LEVEL, HYPERBOLOID_JOBS and HYPERBOLOID_LMAX."""
        log_level = os.getenv('HYPERBOLOID_LOG_LEVEL')
        jobs = os.getenv('HYPERBOLOID_JOBS')
        lmax = os.getenv('HYPERBOLOID_LMAX')
        try:
            if log_level:
                self.output = OutputConfig(self.output.format, log_level, self.output.jobs)
            if jobs:
                self.output = OutputConfig(self.output.format, self.output.log_level, int(jobs))
            if lmax:
                self.verification.lmax = int(lmax)
                self.verification.__post_init__()
        except ValueError as e:
            raise ValueError(f"Invalid HYPERBOLOID_* environment setting: {e}") from e
        return self

    @classmethod
    def from_environment(cls, config_path: Optional[str] = None,
                         env_file_path: Optional[str] = None) -> 'HyperboloidConfig':
        """YAML (or defaults) with environment overrides applied."""
        cls.load_environment_variables(env_file_path)
        config = cls.from_yaml(config_path) if config_path else cls.create_default()
        return config.apply_environment()


@dataclass
class RunConfig:
    """One invocation: parsed flags layered on HyperboloidConfig."""

    subcommand: str
    settings: HyperboloidConfig = field(default_factory=HyperboloidConfig)
    l: int = 1
    lmax: int = 3
    h: Fraction = Fraction(0)
    c: str = "0"
    q0: Optional[Fraction] = None
    output_format: str = "text"
    m: int = 0
    d: Optional[int] = None
    word: str = ""
    mode: str = "enveloping"
    suite: str = "all"
    jobs: int = 1

    def __post_init__(self):
        self.h = Fraction(self.h)
        if self.q0 is not None:
            self.q0 = Fraction(self.q0)
            if self.q0 == 0:
                raise ValueError("q0 must be nonzero")
        if self.l < 0:
            raise ValueError(f"l must be >= 0, got {self.l}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Invalid output format: {self.output_format}")
        if self.suite not in SUITES:
            raise ValueError(f"Invalid suite: {self.suite}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        if self.d is not None and self.d < 0:
            raise ValueError(f"Degree bound must be >= 0, got {self.d}")

    @property
    def numeric(self) -> bool:
        return self.q0 is not None
