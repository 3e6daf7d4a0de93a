"""
Numerical radius through the support function of the numerical range.

p(theta) = lambda_max(cos(theta) Re A + sin(theta) Im A) is the support
function of W(A) in direction e^{i theta}, and w(A) = max_theta p(theta).
The radius is enclosed between the best |<Ax, x>| found (a point of W(A))
and the largest vertex modulus of the outer polygon formed by the
supporting lines, refined by bisection until the two meet within tol.
"""

from typing import Callable

import numpy as np
import numpy.typing as npt

from numrad.errors import InvalidInputError
from numrad.fov.constants import (
    DEFAULT_TOL,
    EPS,
    GOLDEN_ITERATIONS,
    GRID_ANGLES,
    MAX_BISECTION_ROUNDS,
    MAX_PEAKS,
    MIN_BOUNDARY_POINTS,
    ROUNDOFF_FACTOR,
    SWEEP_CHUNK,
    TWO_PI,
)
from numrad.fov.protocol import CertifiedRadius
from numrad.linalg import cartesian_parts, eigh_stack, hermitian_eig
from numrad.utils import ComplexMatrix, RealVector, as_matrix, frobenius_norm, log

ComplexVector = npt.NDArray[np.complex128]
Evaluator = Callable[[RealVector], tuple[RealVector, ComplexVector]]

INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def support_function(A: object, theta: float) -> tuple[float, ComplexVector]:
    """
    Support value and supporting unit vector of W(A) in direction e^{i theta}.

    Returns:
        (p, x) with p = lambda_max(Re(e^{-i theta} A)) and x a unit eigenvector for p;
        <Ax, x> is the boundary point of W(A) touched by the supporting line.
    """
    re, im = cartesian_parts(A)
    eig = hermitian_eig(np.cos(theta) * re + np.sin(theta) * im)
    return eig.max, eig.vectors[:, -1].copy()


def support_batch(
    a: ComplexMatrix, re: ComplexMatrix, im: ComplexMatrix, thetas: RealVector
) -> tuple[RealVector, ComplexVector]:
    """Support values and boundary points <A x_theta, x_theta> for every angle."""
    thetas = np.asarray(thetas, dtype=np.float64)
    values = np.empty(thetas.shape[0], dtype=np.float64)
    points = np.empty(thetas.shape[0], dtype=np.complex128)
    for start in range(0, thetas.shape[0], SWEEP_CHUNK):
        chunk = thetas[start : start + SWEEP_CHUNK]
        stack = np.cos(chunk)[:, None, None] * re[None] + np.sin(chunk)[:, None, None] * im[None]
        eigenvalues, eigenvectors = eigh_stack(stack)
        top = eigenvectors[:, :, -1]
        values[start : start + chunk.shape[0]] = eigenvalues[:, -1]
        points[start : start + chunk.shape[0]] = np.einsum("bi,ij,bj->b", top.conj(), a, top)
    return values, points


def golden_max(
    evaluate: Evaluator, lo: RealVector, hi: RealVector, iterations: int = GOLDEN_ITERATIONS
) -> tuple[RealVector, RealVector, ComplexVector]:
    """
    Batched golden-section maximization over the brackets [lo[i], hi[i]].

    Returns:
        Best angle and objective per bracket, and every boundary point evaluated on the way.
    """
    c = hi - INVPHI * (hi - lo)
    d = lo + INVPHI * (hi - lo)
    fc, zc = evaluate(c)
    fd, zd = evaluate(d)
    seen = [zc, zd]
    for _ in range(iterations):
        left = fc >= fd
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
        new = np.where(left, hi - INVPHI * (hi - lo), lo + INVPHI * (hi - lo))
        fn, zn = evaluate(new)
        seen.append(zn)
        c, fc, d, fd = (
            np.where(left, new, d),
            np.where(left, fn, fd),
            np.where(left, c, new),
            np.where(left, fc, fn),
        )
    best = np.where(fc >= fd, c, d)
    return best, np.maximum(fc, fd), np.concatenate(seen)


def local_maxima(values: RealVector, limit: int = MAX_PEAKS) -> npt.NDArray[np.intp]:
    """Indices of local maxima on a circular grid, the `limit` highest, ascending."""
    peaks = np.flatnonzero((values >= np.roll(values, 1)) & (values >= np.roll(values, -1)))
    if peaks.shape[0] > limit:
        order = np.argsort(-values[peaks], kind="stable")
        peaks = peaks[order[:limit]]
    return np.sort(peaks)


def interval_upper(
    theta_a: RealVector, theta_b: RealVector, p_a: RealVector, p_b: RealVector
) -> RealVector:
    """
    Upper bound of p over each [theta_a, theta_b] (width below pi).

    W(A) lies in the wedge cut out by the two supporting lines, so for theta in
    the interval p(theta) <= Re(e^{-i theta} v) with v the wedge vertex.
    """
    delta = theta_b - theta_a
    s = np.sin(delta)
    x = (p_a * np.sin(theta_b) - p_b * np.sin(theta_a)) / s
    y = (p_b * np.cos(theta_a) - p_a * np.cos(theta_b)) / s
    offset = np.mod(np.arctan2(y, x) - theta_a, TWO_PI)
    return np.where(offset <= delta, np.hypot(x, y), np.maximum(p_a, p_b))


def numerical_radius(A: object, tol: float = DEFAULT_TOL, grid: int = GRID_ANGLES) -> CertifiedRadius:
    """
    Certified numerical radius w(A) = max{|<Ax, x>| : ||x|| = 1}.

    Args:
        A: Square matrix.
        tol: Target error bound, must be positive.
        grid: Number of angles of the initial sweep.

    Returns:
        CertifiedRadius with value - error_bound <= w(A) <= value + error_bound.

    Raises:
        InvalidInputError: If tol <= 0 or A is not a finite square matrix.
    """
    if not tol > 0.0:
        raise InvalidInputError(f"tol must be positive, got {tol}")
    if grid < MIN_BOUNDARY_POINTS:
        raise InvalidInputError(f"grid must have at least {MIN_BOUNDARY_POINTS} angles, got {grid}")
    a = as_matrix(A)
    scale = frobenius_norm(a)
    if scale == 0.0:
        return CertifiedRadius(value=0.0, error_bound=0.0, lipschitz_bound=0.0, evaluations=0)

    re, im = cartesian_parts(a)
    floor = ROUNDOFF_FACTOR * EPS * scale
    step = TWO_PI / grid
    thetas = step * np.arange(grid, dtype=np.float64)
    p, z = support_batch(a, re, im, thetas)
    evaluations = grid
    lower = float(np.max(np.abs(z)))

    def evaluate(angles: RealVector) -> tuple[RealVector, ComplexVector]:
        return support_batch(a, re, im, angles)

    peaks = local_maxima(p)
    _, _, seen = golden_max(evaluate, thetas[peaks] - step, thetas[peaks] + step)
    evaluations += seen.shape[0]
    lower = max(lower, float(np.max(np.abs(seen))))

    theta_a, theta_b = thetas, thetas + step
    p_a, p_b = p, np.roll(p, -1)
    settled = -np.inf
    for _ in range(MAX_BISECTION_ROUNDS):
        bound = interval_upper(theta_a, theta_b, p_a, p_b)
        still_open = bound > lower + tol
        if not np.all(still_open):
            settled = max(settled, float(np.max(bound[~still_open])))
        if not np.any(still_open):
            break
        theta_a, theta_b = theta_a[still_open], theta_b[still_open]
        p_a, p_b = p_a[still_open], p_b[still_open]
        middle = 0.5 * (theta_a + theta_b)
        p_mid, z_mid = support_batch(a, re, im, middle)
        evaluations += middle.shape[0]
        lower = max(lower, float(np.max(np.abs(z_mid))))
        theta_a, theta_b = np.concatenate([theta_a, middle]), np.concatenate([middle, theta_b])
        p_a, p_b = np.concatenate([p_a, p_mid]), np.concatenate([p_mid, p_b])
    else:
        settled = max(settled, float(np.max(interval_upper(theta_a, theta_b, p_a, p_b))))
        log(f"❌ numerical_radius: {theta_a.shape[0]} intervals still open after {MAX_BISECTION_ROUNDS} rounds")

    upper = max(settled, lower)
    error_bound = 0.5 * (upper - lower) + floor
    if error_bound > tol:
        log(f"❌ numerical_radius: certified error {error_bound:.3e} exceeds tol {tol:.3e} (round-off floor {floor:.3e})")
    return CertifiedRadius(
        value=0.5 * (upper + lower),
        error_bound=error_bound,
        lipschitz_bound=0.5 * step * scale,
        evaluations=evaluations,
    )
