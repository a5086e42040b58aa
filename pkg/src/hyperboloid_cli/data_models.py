"""
Pydantic models for the JSON output of every subcommand.

Scalars travel as strings in the Laurent/rational grammar accepted by
QScalar.parse, so a report can be read back exactly.
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from qscalar import QMatrix, QScalar, ScalarParseError


class ClaimStatus(str, Enum):
    """Outcome of one verification claim."""
    PASS = "pass"
    FAIL = "fail"
    PAPER_DISCREPANCY = "paper-discrepancy"
    INFO = "info"


class ClaimModel(BaseModel):
    """One verified statement with its outcome."""

    model_config = ConfigDict(str_strip_whitespace=True, extra="forbid")

    id: str = Field(..., min_length=1, description="Stable claim identifier, e.g. reps.theta")
    status: ClaimStatus = Field(..., description="Outcome of the check")
    note: str = Field(default="", description="Human-readable detail")

    @property
    def is_failure(self) -> bool:
        return self.status is ClaimStatus.FAIL


class ReportModel(BaseModel):
    """Schema-stable output: named matrices, named scalars and claims."""

    model_config = ConfigDict(extra="forbid")

    matrices: Dict[str, List[List[str]]] = Field(default_factory=dict)
    scalars: Dict[str, str] = Field(default_factory=dict)
    claims: List[ClaimModel] = Field(default_factory=list)

    @field_validator('matrices')
    @classmethod
    def validate_rectangular(cls, v: Dict[str, List[List[str]]]) -> Dict[str, List[List[str]]]:
        for name, grid in v.items():
            if len({len(row) for row in grid}) > 1:
                raise ValueError(f"Matrix {name!r} has rows of different lengths")
        return v

    @property
    def failed(self) -> List[ClaimModel]:
        return [claim for claim in self.claims if claim.is_failure]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def add_matrix(self, name: str, matrix: QMatrix) -> None:
        self.matrices[name] = matrix.to_strings()

    def add_scalar(self, name: str, value: object) -> None:
        self.scalars[name] = str(value)

    def matrix(self, name: str) -> QMatrix:
        return QMatrix.from_strings(self.matrices[name])

    def scalar(self, name: str) -> Optional[QScalar]:
        """Parse a scalar back; None for non-scalar entries such as words or modes."""
        try:
            return QScalar.parse(self.scalars[name])
        except ScalarParseError:
            return None
