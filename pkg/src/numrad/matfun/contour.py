"""
Principal fractional powers through the Dunford-Taylor integral

    A^t = 1/(2 pi i) * integral over Gamma of z^t (zI - A)^{-1} dz

on a circle Gamma in the open right half-plane enclosing W(A). With
z = c + r e^{i phi}, dz = i (z - c) d phi, so the trapezoid rule on M nodes is
A^t ~ (1/M) sum_k z_k^t (z_k - c) (z_k I - A)^{-1}.
"""

import math

import numpy as np

from numrad.errors import ConvergenceError, DomainError, InvalidInputError
from numrad.fov import crawford_number, is_accretive, numerical_radius
from numrad.linalg import lu_solve_stack
from numrad.matfun.constants import (
    CHAIN_CROSS_CHECK_RTOL,
    CHAIN_MAX_HALVINGS,
    ILL_CONDITIONED_RATIO,
    INITIAL_NODES,
    MAX_NODES,
    MAX_ROOT_REDUCTIONS,
    NODE_CHUNK,
    QUADRATURE_RTOL,
)
from numrad.matfun.protocol import ContourSpec, PowerResult
from numrad.matfun.sqrt import sqrt_db
from numrad.utils import ComplexMatrix, RealVector, as_matrix, frobenius_norm, log


def contour_for(A: object, w: float | None = None, nodes: int = INITIAL_NODES) -> ContourSpec:
    """
    Plan the quadrature circle for an accretive matrix.

    Every z in W(A) satisfies |z - c|^2 <= w^2 - 2 c delta + c^2; with
    c = max(w^2/delta, 2w) and r = (c + sqrt(c^2 - w^2))/2 the circle encloses
    W(A) and stays strictly right of the origin.

    Args:
        A: Accretive matrix.
        w: Upper bound of the numerical radius, computed when omitted.
        nodes: Initial node count.

    Raises:
        DomainError: If delta = lambda_min(Re A) <= 0.
    """
    a = as_matrix(A)
    delta = crawford_number(a)
    if not delta > 0.0:
        raise DomainError(f"contour needs an accretive matrix: lambda_min(Re A) = {delta:.6g}")
    if w is None:
        w = numerical_radius(a).upper
    w = max(w, delta)
    center = max(w * w / delta, 2.0 * w)
    radius = 0.5 * (center + math.sqrt(max(center * center - w * w, 0.0)))
    ill_conditioned = delta / w < ILL_CONDITIONED_RATIO
    if ill_conditioned:
        log(f"❌ ill-conditioned contour: delta / w = {delta / w:.3e}")
    return ContourSpec(center=center, radius=radius, nodes=nodes, delta=delta, w=w, ill_conditioned=ill_conditioned)


def _node_sum(a: ComplexMatrix, t: float, contour: ContourSpec, phases: RealVector) -> ComplexMatrix:
    """sum_k z_k^t (z_k - c)(z_k I - A)^{-1} over z_k = c + r e^{i phase_k}, index-ascending."""
    n = a.shape[0]
    identity = np.eye(n, dtype=np.complex128)
    total = np.zeros((n, n), dtype=np.complex128)
    for start in range(0, phases.shape[0], NODE_CHUNK):
        z = contour.center + contour.radius * np.exp(1j * phases[start : start + NODE_CHUNK])
        shifted = z[:, None, None] * identity[None] - a[None]
        resolvents = lu_solve_stack(shifted, identity)
        weights = np.power(z, t) * (z - contour.center)
        total += np.sum(weights[:, None, None] * resolvents, axis=0)
    return total


def trapezoid_power(A: object, t: float, contour: ContourSpec) -> ComplexMatrix:
    """The trapezoid approximation of A^t on exactly `contour.nodes` nodes."""
    a = as_matrix(A)
    m = contour.nodes
    phases = 2.0 * math.pi * np.arange(m, dtype=np.float64) / m
    return _node_sum(a, t, contour, phases) / m


def _quadrature(
    a: ComplexMatrix, t: float, contour: ContourSpec, rtol: float, max_nodes: int
) -> tuple[ComplexMatrix, float, int, bool]:
    m = contour.nodes
    estimate = trapezoid_power(a, t, contour)
    while True:
        # T_2M = T_M / 2 + (1 / 2M) * sum over the odd nodes of the finer level
        odd = 2.0 * math.pi * (2.0 * np.arange(m, dtype=np.float64) + 1.0) / (2 * m)
        refined = 0.5 * estimate + _node_sum(a, t, contour, odd) / (2 * m)
        m *= 2
        change = frobenius_norm(refined - estimate)
        estimate = refined
        if change <= rtol * frobenius_norm(estimate):
            return estimate, change, m, True
        if 2 * m > max_nodes:
            log(f"❌ quadrature stagnated at {m} nodes: level change {change:.3e}")
            return estimate, change, m, False


def fractional_power(
    A: object,
    t: float,
    rtol: float = QUADRATURE_RTOL,
    initial_nodes: int = INITIAL_NODES,
    max_nodes: int = MAX_NODES,
) -> PowerResult:
    """
    Principal power A^t, 0 < t < 1, of an accretive matrix.

    When the planned circle would need more than `max_nodes / 2` nodes, up to six
    Denman-Beavers square roots B = A^{1/2^s} are taken first and
    A^t = B^m B^f with m + f = t 2^s, B^f from the contour integral.

    The reported `error` adds to the quadrature error a first-order estimate of
    the root error: residuals rho_k = ||B_k^2 - B_{k-1}||_F / ||B_{k-1}||_F give
    a relative error of sum(rho_k) / 2 in B, scaled by the exponent t 2^s.

    Raises:
        DomainError: If t is outside (0, 1) or A is not accretive.
    """
    if not 0.0 < t < 1.0:
        raise DomainError(f"fractional_power needs 0 < t < 1, got {t}")
    a = as_matrix(A)
    accretive, delta = is_accretive(a)
    if not accretive:
        raise DomainError(f"matrix is not accretive: lambda_min(Re A) = {delta:.6g}")

    base = a
    contour = contour_for(base, nodes=initial_nodes)
    reductions = 0
    residual = 0.0
    # the stopping test sees the error of the coarser level, so plan for twice the predicted nodes
    while 2 * contour.predicted_nodes(rtol) > max_nodes and reductions < MAX_ROOT_REDUCTIONS:
        root = sqrt_db(base)
        residual += frobenius_norm(root @ root - base) / frobenius_norm(base)
        base = root
        reductions += 1
        contour = contour_for(base, nodes=initial_nodes)
    if reductions:
        log(f"fractional_power: {reductions} square root(s) before the contour, q = {contour.convergence_factor:.4f}")

    exponent = t * 2**reductions
    whole = math.floor(exponent)
    fraction = exponent - whole
    relative_root_error = 0.5 * exponent * residual
    if fraction == 0.0:
        leading = np.linalg.matrix_power(base, whole)
        return PowerResult(
            matrix=leading,
            quadrature_error=0.0,
            t=t,
            nodes=0,
            reductions=reductions,
            contour=contour,
            root_error=relative_root_error * frobenius_norm(leading),
        )

    matrix, change, nodes, converged = _quadrature(base, fraction, contour, rtol, max_nodes)
    if whole:
        leading = np.linalg.matrix_power(base, whole)
        matrix = leading @ matrix
        change *= frobenius_norm(leading)
    return PowerResult(
        matrix=matrix,
        quadrature_error=change,
        t=t,
        nodes=nodes,
        reductions=reductions,
        converged=converged,
        contour=contour,
        root_error=relative_root_error * frobenius_norm(matrix),
    )


def matrix_power(A: object, t: float) -> ComplexMatrix:
    """A^t for 0 <= t <= 1; t = 0 gives I and t = 1 gives A without quadrature."""
    a = as_matrix(A)
    if t == 0.0:
        return np.eye(a.shape[0], dtype=np.complex128)
    if t == 1.0:
        return a.copy()
    return fractional_power(a, t).matrix


def power_chain(A: object, n_halvings: int, cross_check: bool = False) -> ComplexMatrix:
    """
    A^{1/2^n} by n successive Denman-Beavers square roots.

    Args:
        A: Accretive matrix.
        n_halvings: 1 <= n <= 6.
        cross_check: Compare against fractional_power(A, 2^-n), relative Frobenius 1e-7.

    Raises:
        ConvergenceError: If the cross-check fails.
    """
    if not 1 <= n_halvings <= CHAIN_MAX_HALVINGS:
        raise InvalidInputError(f"n_halvings must be in 1..{CHAIN_MAX_HALVINGS}, got {n_halvings}")
    a = as_matrix(A)
    root = a
    for _ in range(n_halvings):
        root = sqrt_db(root)
    if cross_check:
        reference = fractional_power(a, 2.0**-n_halvings).matrix
        gap = frobenius_norm(root - reference) / max(frobenius_norm(reference), np.finfo(np.float64).tiny)
        if gap > CHAIN_CROSS_CHECK_RTOL:
            log(f"❌ power chain disagrees with the contour route by {gap:.3e}")
            raise ConvergenceError(f"power chain and contour route disagree by {gap:.3e}", achieved=gap)
    return root
