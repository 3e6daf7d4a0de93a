import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from numrad.catalog.protocol import Side
from numrad.utils import ComplexMatrix

Format = Literal["json", "csv", "table"]
Condition = Literal["all", "im-dominant", "re-dominant", "cartesian-threshold", "commutator-threshold"]


class MatrixDocument(BaseModel):
    """
    The matrix file format: {"n": k, "entries": [[[re, im], ...], ...]}, row-major.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(..., ge=1)
    entries: list[list[tuple[float, float]]]

    @model_validator(mode="after")
    def _square(self) -> "MatrixDocument":
        if len(self.entries) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.n}")
            for re, im in row:
                if not (math.isfinite(re) and math.isfinite(im)):
                    raise ValueError(f"row {i} holds a non-finite entry")
        return self

    def to_matrix(self) -> ComplexMatrix:
        parts = np.array(self.entries, dtype=np.float64).reshape(self.n, self.n, 2)
        return parts[..., 0] + 1j * parts[..., 1]

    @classmethod
    def from_matrix(cls, matrix: ComplexMatrix) -> "MatrixDocument":
        entries = [[(float(z.real), float(z.imag)) for z in row] for row in matrix]
        return cls(n=matrix.shape[0], entries=entries)


class Witness(BaseModel):
    """The input behind the smallest slack of a run, archived for regression seeds."""

    trial: int
    sign: int | None = None
    gamma: float | None = None
    alpha: float | None = None
    n_halvings: int | None = None
    slack: float
    matrices: dict[str, MatrixDocument]


class HistogramBucket(BaseModel):
    model_config = ConfigDict(ser_json_inf_nan="constants")

    low: float
    high: float
    count: int = Field(..., ge=0)


class RunReport(BaseModel):
    """
    Outcome of one falsification sweep.

    Attributes:
    - trials: Generated inputs.
    - evaluations: Bound evaluations (two per trial for +- bounds).
    - violations: Evaluations with slack < -certified_error.
    - skipped: Trials whose input failed an applicability check at round-off level.
    - min_slack: Smallest slack seen, +inf when nothing was evaluated.
    - relative_min_slack: Smallest slack relative to max(|lhs|, |rhs|).
    - min_slack_witness: The input behind min_slack.
    - slack_histogram: Counts of relative slack per bucket.
    - wall_time: Seconds spent; the only field that varies between identical runs.
    """

    model_config = ConfigDict(ser_json_inf_nan="constants")

    bound_id: str
    seed: int
    trials: int = Field(..., ge=0)
    evaluations: int = Field(0, ge=0)
    violations: int = Field(0, ge=0)
    skipped: int = Field(0, ge=0)
    min_slack: float = math.inf
    relative_min_slack: float = math.inf
    min_slack_witness: Witness | None = None
    slack_histogram: list[HistogramBucket] = Field(default_factory=list)
    wall_time: float = 0.0

    def deterministic_json(self) -> str:
        return self.model_dump_json(exclude={"wall_time"})


class ConditionFraction(BaseModel):
    model_config = ConfigDict(ser_json_inf_nan="constants")

    condition: Condition
    samples: int = Field(..., ge=0)
    dominant: int = Field(..., ge=0)
    fraction: float | None = None  # None when no sample met the condition


class SharpnessReport(BaseModel):
    """
    Per-trial comparison of two bounds on the same target and side.

    `dominant` counts comparisons where `bound_a` is at least as sharp as
    `bound_b`, within their combined certified error.
    """

    bound_a: str
    bound_b: str
    target: str
    side: Side
    seed: int
    trials: int = Field(..., ge=0)
    skipped: int = Field(0, ge=0)
    conditions: list[ConditionFraction] = Field(default_factory=list)

    def fraction(self, condition: Condition = "all") -> float | None:
        for row in self.conditions:
            if row.condition == condition:
                return row.fraction
        return None


class RadiusReport(BaseModel):
    model_config = ConfigDict(ser_json_inf_nan="constants")

    n: int
    value: float
    error_bound: float
    lower: float
    upper: float
    norm: float
    accretive: bool
    crawford: float
    gamma: float | None = None
    sin_gamma: float | None = None


class GoldenRow(BaseModel):
    quantity: str
    value: float
    expected: float
    deviation: float
    matches: bool
