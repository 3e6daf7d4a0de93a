"""
Numerical-range geometry: boundary sampling, accretivity, sectors and cones.
"""

from dataclasses import dataclass
from typing import Literal

import numpy as np

from numrad.errors import DomainError, InvalidInputError, NotConeConfinedError
from numrad.fov.constants import (
    CONE_ARG_ATOL,
    DEFAULT_BOUNDARY_POINTS,
    HALF_PI,
    INDEX_SWEEP_ANGLES,
    MARGIN_RTOL,
    MIN_BOUNDARY_POINTS,
    TWO_PI,
    ZERO_IM_RTOL,
)
from numrad.fov.protocol import RayCone, SectorCone
from numrad.fov.radius import ComplexVector, golden_max, local_maxima, support_batch
from numrad.linalg import cartesian_parts, eigh_stack, operator_norm
from numrad.linalg.constants import SWEEP_SOLVER
from numrad.utils import ComplexMatrix, RealVector, as_matrix, frobenius_norm

ConeMethod = Literal["pencil", "polygon"]


@dataclass(frozen=True)
class BoundaryScan:
    angles: RealVector
    support_values: RealVector  # p(theta) = lambda_max(Re(e^{-i theta} A))
    boundary_points: ComplexVector  # <A x_theta, x_theta>, in angular order

    def outer_vertices(self) -> ComplexVector:
        """Vertices of the outer polygon; vertex i joins the supporting lines i and i + 1."""
        theta_a = self.angles
        theta_b = np.roll(self.angles, -1).copy()
        theta_b[-1] += TWO_PI
        p_a = self.support_values
        p_b = np.roll(self.support_values, -1)
        s = np.sin(theta_b - theta_a)
        x = (p_a * np.sin(theta_b) - p_b * np.sin(theta_a)) / s
        y = (p_b * np.cos(theta_a) - p_a * np.cos(theta_b)) / s
        return x + 1j * y

    def contains(self, z: complex | ComplexVector, atol: float = 1e-12) -> bool:
        """Whether every z lies in the outer polygon (all supporting half-planes)."""
        points = np.atleast_1d(np.asarray(z, dtype=np.complex128))
        projections = np.real(np.exp(-1j * self.angles)[:, None] * points[None, :])
        return bool(np.all(projections <= self.support_values[:, None] + atol))

    def hausdorff_gap(self) -> float:
        """Largest distance from an outer vertex to the inner polygon edge facing it."""
        vertices = self.outer_vertices()
        start = self.boundary_points
        edge = np.roll(self.boundary_points, -1) - start
        length2 = np.abs(edge) ** 2
        safe = np.where(length2 > 0.0, length2, 1.0)
        t = np.where(length2 > 0.0, np.real((vertices - start) * np.conj(edge)) / safe, 0.0)
        nearest = start + np.clip(t, 0.0, 1.0) * edge
        return float(np.max(np.abs(vertices - nearest)))

    @property
    def max_modulus(self) -> float:
        return float(np.max(np.abs(self.boundary_points)))


def boundary_polygon(A: object, N: int = DEFAULT_BOUNDARY_POINTS) -> BoundaryScan:
    """
    Sample the boundary of W(A) at N equally spaced support directions.

    The inner polygon (hull of `boundary_points`) lies inside W(A), which
    lies inside the outer polygon of the N supporting half-planes.

    Raises:
        InvalidInputError: If N < 8.
    """
    if N < MIN_BOUNDARY_POINTS:
        raise InvalidInputError(f"N must be at least {MIN_BOUNDARY_POINTS}, got {N}")
    a = as_matrix(A)
    re, im = cartesian_parts(a)
    angles = TWO_PI * np.arange(N, dtype=np.float64) / N
    values, points = support_batch(a, re, im, angles)
    return BoundaryScan(angles=angles, support_values=values, boundary_points=points)


def default_margin(A: ComplexMatrix) -> float:
    return MARGIN_RTOL * operator_norm(A, solver=SWEEP_SOLVER)


def _lambda_min(H: ComplexMatrix) -> float:
    values, _ = eigh_stack(H[None])
    return float(values[0, 0])


def crawford_number(A: object) -> float:
    """lambda_min(Re A), the distance from the imaginary axis to W(A) when positive."""
    re, _ = cartesian_parts(A)
    return _lambda_min(re)


def is_accretive(A: object, margin: float | None = None) -> tuple[bool, float]:
    """
    Returns:
        (delta > margin, delta) with delta = lambda_min(Re A); the default
        margin is 1e-10 * ||A||.
    """
    a = as_matrix(A)
    if margin is None:
        margin = default_margin(a)
    elif margin < 0.0:
        raise InvalidInputError(f"margin must be non-negative, got {margin}")
    delta = crawford_number(a)
    return delta > margin, delta


def is_accretive_dissipative(A: object, margin: float | None = None) -> bool:
    a = as_matrix(A)
    if margin is None:
        margin = default_margin(a)
    elif margin < 0.0:
        raise InvalidInputError(f"margin must be non-negative, got {margin}")
    re, im = cartesian_parts(a)
    return _lambda_min(re) > margin and _lambda_min(im) > margin


def _require_accretive(a: ComplexMatrix, margin: float | None) -> float:
    accretive, delta = is_accretive(a, margin)
    if not accretive:
        raise DomainError(f"matrix is not accretive: lambda_min(Re A) = {delta:.6g}")
    return delta


def pencil_spectrum(re: ComplexMatrix, im: ComplexMatrix) -> RealVector:
    """Eigenvalues (ascending) of P^{-1/2} K P^{-1/2} for P = Re A > 0 and K = Im A."""
    values, vectors = eigh_stack(re[None])
    inv_sqrt = (vectors[0] / np.sqrt(values[0])[None, :]) @ vectors[0].conj().T
    mu, _ = eigh_stack((inv_sqrt @ im @ inv_sqrt)[None])
    return mu[0]


def sectorial_index(A: object, margin: float | None = None) -> SectorCone:
    """
    Minimal gamma with W(A) inside S_gamma, gamma = arctan ||P^{-1/2} K P^{-1/2}||.

    Raises:
        DomainError: If A is not accretive.
    """
    a = as_matrix(A)
    _require_accretive(a, margin)
    re, im = cartesian_parts(a)
    if frobenius_norm(im) <= ZERO_IM_RTOL * frobenius_norm(a):
        return SectorCone(gamma=0.0)
    mu = pencil_spectrum(re, im)
    rho = max(abs(float(mu[0])), abs(float(mu[-1])))
    return SectorCone(gamma=float(np.arctan(rho)))


def sectorial_index_sweep(A: object, N: int = INDEX_SWEEP_ANGLES, margin: float | None = None) -> SectorCone:
    """Sectorial index as max |arg z| over sampled boundary points, refined by golden-section search."""
    a = as_matrix(A)
    _require_accretive(a, margin)
    re, im = cartesian_parts(a)

    def evaluate(angles: RealVector) -> tuple[RealVector, ComplexVector]:
        _, points = support_batch(a, re, im, angles)
        return np.abs(np.angle(points)), points

    step = TWO_PI / N
    angles = step * np.arange(N, dtype=np.float64)
    objective, _ = evaluate(angles)
    peaks = local_maxima(objective)
    _, refined, _ = golden_max(evaluate, angles[peaks] - step, angles[peaks] + step)
    gamma = max(float(np.max(objective)), float(np.max(refined)))
    return SectorCone(gamma=min(gamma, np.nextafter(HALF_PI, 0.0)))


def cone_fit(A: object, method: ConeMethod = "pencil", N: int = DEFAULT_BOUNDARY_POINTS) -> RayCone:
    """
    Fit the cone {r e^{-+i theta} : theta1 <= theta <= theta2} containing W(A).

    `pencil` takes the argument range as arctan of the extreme eigenvalues of
    P^{-1/2} K P^{-1/2}, which is exact; `polygon` takes it over the vertices
    of the N-gon outer approximation, which over-covers W(A).

    Raises:
        DomainError: If A is not accretive.
        NotConeConfinedError: If the argument range straddles the real axis.
    """
    a = as_matrix(A)
    _require_accretive(a, None)
    re, im = cartesian_parts(a)
    if method == "pencil":
        mu = pencil_spectrum(re, im)
        alpha_min, alpha_max = float(np.arctan(mu[0])), float(np.arctan(mu[-1]))
    else:
        arguments = np.angle(boundary_polygon(a, N).outer_vertices())
        alpha_min, alpha_max = float(np.min(arguments)), float(np.max(arguments))

    if alpha_max <= CONE_ARG_ATOL:
        theta1, theta2, orientation = -alpha_max, -alpha_min, "lower"
    elif alpha_min >= -CONE_ARG_ATOL:
        theta1, theta2, orientation = alpha_min, alpha_max, "upper"
    else:
        raise NotConeConfinedError(alpha_min, alpha_max)
    theta1 = float(np.clip(theta1, 0.0, HALF_PI))
    theta2 = float(np.clip(theta2, theta1, HALF_PI))
    return RayCone(theta1=theta1, theta2=theta2, orientation=orientation)
