import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from numrad.fov.protocol import Orientation

EnsembleKind = Literal["sectorial", "accretive-dissipative", "double-commuting", "cone", "generic"]

HALF_PI = 0.5 * math.pi


class EnsembleSpec(BaseModel):
    """
    Recipe for a seeded random matrix ensemble.

    Attributes:
    - kind: Structural class every sample belongs to.
    - n: Dimension, unless `n_range` is set.
    - family_size: Matrices drawn per sample (family members share one resolved recipe).
    - gamma_target: Sector half-angle for sectorial, accretive-dissipative and double-commuting samples.
    - theta1, theta2: Cone angles for cone samples.
    - orientation: Cone side; `upper` samples are adjoints of `lower` ones.
    - modulus_range: [r_min, r_max] for eigenvalues of Re A, diagonal moduli, or ||A|| of generic samples.
    - seed: Root of the per-sample streams.
    - n_range, gamma_range, cone_range: When set, each sample draws its dimension, gamma or
      cone angles from the sample stream instead of using the fixed fields.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: EnsembleKind = "sectorial"
    n: int = Field(4, ge=1, le=512)
    family_size: int = Field(1, ge=1)
    gamma_target: float | None = Field(None, ge=0.0, lt=HALF_PI)
    theta1: float | None = Field(None, ge=0.0, lt=HALF_PI)
    theta2: float | None = Field(None, ge=0.0, lt=HALF_PI)
    orientation: Orientation = "lower"
    modulus_range: tuple[float, float] = (0.5, 2.0)
    seed: int = Field(0, ge=0, lt=2**64)
    n_range: tuple[int, int] | None = None
    gamma_range: tuple[float, float] | None = None
    cone_range: tuple[float, float] | None = None

    @model_validator(mode="after")
    def _ranges(self) -> "EnsembleSpec":
        low, high = self.modulus_range
        if not 0.0 < low <= high or not math.isfinite(high):
            raise ValueError(f"modulus_range must satisfy 0 < r_min <= r_max, got {self.modulus_range}")
        if self.n_range is not None and not 1 <= self.n_range[0] <= self.n_range[1]:
            raise ValueError(f"n_range must satisfy 1 <= n_min <= n_max, got {self.n_range}")
        if self.gamma_range is not None and not 0.0 <= self.gamma_range[0] <= self.gamma_range[1] < HALF_PI:
            raise ValueError(f"gamma_range must lie in [0, pi/2), got {self.gamma_range}")
        if self.cone_range is not None and not 0.0 < self.cone_range[0] <= self.cone_range[1] < HALF_PI:
            raise ValueError(f"cone_range must lie in (0, pi/2), got {self.cone_range}")
        if self.theta1 is not None and self.theta2 is not None and self.theta1 > self.theta2:
            raise ValueError(f"theta1 ({self.theta1}) must not exceed theta2 ({self.theta2})")
        if self.kind == "accretive-dissipative" and self.gamma_target == 0.0:
            raise ValueError("accretive-dissipative samples need gamma_target > 0")
        return self

    def resolve(self, rng: np.random.Generator) -> "EnsembleSpec":
        """A copy with n, gamma_target and the cone angles fixed, drawing every ranged field from `rng`."""
        update: dict[str, object] = {}
        if self.n_range is not None:
            update["n"] = int(rng.integers(self.n_range[0], self.n_range[1] + 1))
        if self.gamma_range is not None:
            update["gamma_target"] = float(rng.uniform(*self.gamma_range))
        if self.cone_range is not None:
            first, second = np.sort(rng.uniform(*self.cone_range, size=2))
            update["theta1"], update["theta2"] = float(first), float(second)
        update.update(n_range=None, gamma_range=None, cone_range=None)
        return self.model_copy(update=update)
