import math
import re
from dataclasses import dataclass, field
from typing import Literal, Mapping

from pydantic import BaseModel, ConfigDict, Field, model_validator

from numrad.errors import InvalidInputError
from numrad.fov.protocol import RayCone
from numrad.utils import ComplexMatrix, as_matrix

Side = Literal["lower", "upper"]
Kind = Literal["single", "commutator", "family"]
Predicate = Literal[
    "none",
    "accretive",
    "sectorial",
    "sectorial_nonzero",
    "accretive_dissipative",
    "double_commuting",
    "cone",
]
Parameter = Literal["alpha", "n_halvings", "sign"]

FAMILY_ROLE = re.compile(r"^(?P<prefix>[AB])_(?P<index>[1-9][0-9]*)$")
SINGLE_ROLES = ("A", "B", "X", "Y")


class BoundSpec(BaseModel):
    """
    Registry metadata of one inequality.

    Attributes:
    - id: Stable public key used by the CLI and report files.
    - side: `lower` when the bound expression is a lower bound of the target, `upper` otherwise.
    - target: The quantity being bounded, e.g. "w^2(A)".
    - kind: Which evaluator accepts the bound.
    - roles: Matrix roles read by the bound.
    - predicates: Applicability predicates checked before evaluation.
    - parameters: Extra inputs the bound reads.
    - group: Catalog group the bound is registered under.
    - statement: The inequality in plain text.
    - baseline: Whether the bound is a classical bound the others are compared against.
    """

    model_config = ConfigDict(frozen=True)

    id: str
    side: Side
    target: str
    kind: Kind
    roles: list[str]
    predicates: list[Predicate]
    parameters: list[Parameter] = Field(default_factory=list)
    group: str
    statement: str
    baseline: bool = False


class BoundEvaluation(BaseModel):
    """
    One inequality instantiated on concrete matrices.

    `lhs` is the target value and `rhs` the bound expression; slack >= 0 means
    the inequality holds, and `holds` accepts slack down to -certified_error.
    """

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    bound_id: str
    side: Side
    target: str
    lhs: float
    rhs: float
    slack: float
    certified_error: float = Field(..., ge=0.0)
    holds: bool
    relative_slack: float
    sign: int | None = None
    gamma: float | None = None
    predicates: list[Predicate] = Field(default_factory=list)

    @model_validator(mode="after")
    def _consistent(self) -> "BoundEvaluation":
        if self.holds != (self.slack >= -self.certified_error):
            raise ValueError("holds must equal slack >= -certified_error")
        return self


@dataclass(frozen=True)
class InequalityInput:
    """
    Named matrices plus the optional parameters a bound may read.

    Roles are A, B, X, Y for single and commutator bounds and A_1..A_n,
    B_1..B_n for families. A missing `gamma` is computed as the largest
    sectorial index over the bound's sectorial roles.
    """

    matrices: Mapping[str, ComplexMatrix]
    gamma: float | None = None
    cone: RayCone | None = None
    alpha: float | None = None
    n_halvings: int | None = None
    sign: int = 1
    dimension: int = field(init=False)

    def __post_init__(self) -> None:
        if not self.matrices:
            raise InvalidInputError("at least one matrix is required")
        normalized: dict[str, ComplexMatrix] = {}
        for role, data in self.matrices.items():
            if role not in SINGLE_ROLES and not FAMILY_ROLE.match(role):
                raise InvalidInputError(f"unknown matrix role '{role}'")
            normalized[role] = as_matrix(data, role)
        sizes = {m.shape[0] for m in normalized.values()}
        if len(sizes) != 1:
            raise InvalidInputError(f"matrices must share one dimension, got {sorted(sizes)}")
        if self.sign not in (1, -1):
            raise InvalidInputError(f"sign must be +1 or -1, got {self.sign}")
        if self.alpha is not None and not 0.0 < self.alpha < 1.0:
            raise InvalidInputError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.n_halvings is not None and not 1 <= self.n_halvings <= 6:
            raise InvalidInputError(f"n_halvings must be in 1..6, got {self.n_halvings}")
        if self.gamma is not None and not 0.0 <= self.gamma < math.pi / 2:
            raise InvalidInputError(f"gamma must lie in [0, pi/2), got {self.gamma}")
        object.__setattr__(self, "matrices", normalized)
        object.__setattr__(self, "dimension", sizes.pop())

    def has(self, role: str) -> bool:
        return role in self.matrices

    def role(self, name: str) -> ComplexMatrix:
        try:
            return self.matrices[name]
        except KeyError:
            raise InvalidInputError(f"missing matrix role '{name}'") from None

    def family(self, prefix: str) -> list[str]:
        """Roles prefix_1..prefix_n in index order; the bare role `prefix` is a family of one."""
        members: list[tuple[int, str]] = []
        for role in self.matrices:
            match = FAMILY_ROLE.match(role)
            if match and match.group("prefix") == prefix:
                members.append((int(match.group("index")), role))
        if members:
            return [role for _, role in sorted(members)]
        return [prefix] if prefix in self.matrices else []

    def with_sign(self, sign: int) -> "InequalityInput":
        return InequalityInput(
            matrices=self.matrices,
            gamma=self.gamma,
            cone=self.cone,
            alpha=self.alpha,
            n_halvings=self.n_halvings,
            sign=sign,
        )
