import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

Orientation = Literal["lower", "upper"]


class SectorCone(BaseModel):
    """
    The sector S_gamma = {z : Re z > 0, |Im z| <= tan(gamma) Re z}.

    Attributes:
    - gamma: half-angle in radians, 0 <= gamma < pi/2.
    """

    model_config = ConfigDict(frozen=True)

    gamma: float = Field(..., ge=0.0, lt=math.pi / 2, description="Half-angle of the sector in radians.")

    @property
    def tan(self) -> float:
        return math.tan(self.gamma)

    @property
    def sin(self) -> float:
        return math.sin(self.gamma)

    @property
    def cos(self) -> float:
        return math.cos(self.gamma)

    @property
    def csc(self) -> float:
        return math.inf if self.gamma == 0.0 else 1.0 / math.sin(self.gamma)


class RayCone(BaseModel):
    """
    Angular confinement of the numerical range.

    `lower` means W(A) lies in {r e^{-i theta} : theta1 <= theta <= theta2};
    `upper` means W(A) lies in {r e^{+i theta} : theta1 <= theta <= theta2}.
    """

    model_config = ConfigDict(frozen=True)

    theta1: float = Field(..., ge=0.0, le=math.pi / 2, description="Smaller cone angle in radians.")
    theta2: float = Field(..., ge=0.0, le=math.pi / 2, description="Larger cone angle in radians.")
    orientation: Orientation = Field("lower", description="Side of the real axis the cone opens to.")

    @model_validator(mode="after")
    def _ordered(self) -> "RayCone":
        if self.theta1 > self.theta2:
            raise ValueError(f"theta1 ({self.theta1}) must not exceed theta2 ({self.theta2})")
        return self

    @property
    def gamma1(self) -> float:
        """max{theta2, pi/2 - theta1}: a sector half-angle shared by A and its quarter-turn rotation."""
        return max(self.theta2, math.pi / 2 - self.theta1)

    @property
    def width(self) -> float:
        return self.theta2 - self.theta1

    def argument_range(self) -> tuple[float, float]:
        """Range of arg z over the cone, as signed angles."""
        if self.orientation == "lower":
            return -self.theta2, -self.theta1
        return self.theta1, self.theta2


class CertifiedRadius(BaseModel):
    """
    A numerical radius with a certificate: value - error_bound <= w(A) <= value + error_bound.
    """

    model_config = ConfigDict(frozen=True)

    value: float = Field(..., ge=0.0, description="Midpoint of the certified enclosure of w(A).")
    error_bound: float = Field(..., ge=0.0, description="Half-width of the enclosure plus a round-off floor.")
    lipschitz_bound: float = Field(
        0.0, ge=0.0, description="Error a plain angle grid would certify through the Lipschitz constant ||A||."
    )
    evaluations: int = Field(0, ge=0, description="Number of Hermitian eigensolves spent.")

    @property
    def lower(self) -> float:
        return max(self.value - self.error_bound, 0.0)

    @property
    def upper(self) -> float:
        return self.value + self.error_bound
