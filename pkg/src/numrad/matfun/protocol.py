import math
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field, model_validator

from numrad.utils import ComplexMatrix


class ContourSpec(BaseModel):
    """
    Circle |z - center| = radius in the open right half-plane enclosing W(A).

    Attributes:
    - center: c > 0.
    - radius: r with r < c, so the circle stays clear of the branch cut (-inf, 0].
    - nodes: initial number of trapezoid nodes.
    - delta: lambda_min(Re A) the circle was planned from.
    - w: numerical radius (upper enclosure) the circle was planned from.
    - ill_conditioned: delta / w fell below 1e-6.
    """

    model_config = ConfigDict(frozen=True)

    center: float = Field(..., gt=0.0)
    radius: float = Field(..., gt=0.0)
    nodes: int = Field(64, ge=1)
    delta: float = Field(..., gt=0.0)
    w: float = Field(..., gt=0.0)
    ill_conditioned: bool = False

    @model_validator(mode="after")
    def _inside_half_plane(self) -> "ContourSpec":
        if not self.radius < self.center:
            raise ValueError(f"radius {self.radius} must be below center {self.center}")
        return self

    @property
    def inner_radius(self) -> float:
        """Radius about the center of a disc containing W(A)."""
        return math.sqrt(max(self.w**2 - 2.0 * self.center * self.delta + self.center**2, 0.0))

    @property
    def convergence_factor(self) -> float:
        """Geometric rate q of the trapezoid rule on this circle."""
        return max(self.inner_radius / self.radius, self.radius / self.center)

    def predicted_nodes(self, rtol: float) -> int:
        q = self.convergence_factor
        if q <= 0.0:
            return self.nodes
        if q >= 1.0:
            return 2**62
        return max(self.nodes, math.ceil(math.log(rtol) / math.log(q)))


@dataclass(frozen=True)
class PowerResult:
    matrix: ComplexMatrix  # A^t
    quadrature_error: float  # Frobenius difference of the last two node levels
    t: float
    nodes: int = 0  # nodes of the finest level, 0 when no quadrature was needed
    reductions: int = 0  # square roots taken before the contour
    converged: bool = True
    contour: ContourSpec | None = None
    root_error: float = 0.0  # first-order error carried in from the square-root reductions

    @property
    def error(self) -> float:
        return self.quadrature_error + self.root_error
