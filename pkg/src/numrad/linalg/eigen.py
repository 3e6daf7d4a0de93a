"""
Hermitian eigensolvers.

`hermitian_eig` solves one matrix; `eigh_stack` solves a stack of shape
(b, n, n) in one call. The reference solver is a cyclic complex Jacobi
iteration that rotates all matrices of a stack at once; `lapack` routes
through `numpy.linalg.eigh`.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from numrad.errors import ConvergenceError, InvalidInputError
from numrad.linalg.constants import (
    DEFAULT_SOLVER,
    HERMITIAN_RTOL,
    JACOBI_MAX_SWEEPS,
    JACOBI_OFF_RTOL,
    JACOBI_THRESHOLD_SWEEPS,
    SWEEP_SOLVER,
    Solver,
)
from numrad.utils import ComplexMatrix, RealVector, as_matrix, frobenius_norm, log


@dataclass(frozen=True)
class HermitianEigen:
    values: RealVector  # ascending
    vectors: ComplexMatrix  # unitary, column i belongs to values[i]

    @property
    def min(self) -> float:
        return float(self.values[0])

    @property
    def max(self) -> float:
        return float(self.values[-1])

    def residual(self, H: ComplexMatrix) -> float:
        """||H V - V diag(values)||_F."""
        return frobenius_norm(H @ self.vectors - self.vectors * self.values[None, :])

    def orthogonality(self) -> float:
        """||V* V - I||_F."""
        n = self.vectors.shape[0]
        return frobenius_norm(self.vectors.conj().T @ self.vectors - np.eye(n))


def hermitian_eig(H: object, solver: Solver = DEFAULT_SOLVER) -> HermitianEigen:
    """
    Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    The input is symmetrized as (H + H*)/2 before solving.

    Raises:
        InvalidInputError: If H is further than 1e-10 * ||H||_F from Hermitian.
        ConvergenceError: If the Jacobi sweeps are exhausted.
    """
    matrix = as_matrix(H, "H")
    skew = frobenius_norm(matrix - matrix.conj().T)
    if skew > HERMITIAN_RTOL * frobenius_norm(matrix):
        raise InvalidInputError(f"H: not Hermitian (||H - H*||_F = {skew:.3e})")
    values, vectors = eigh_stack(matrix[None, :, :], solver=solver)
    return HermitianEigen(values=values[0], vectors=vectors[0])


def eigh_stack(
    stack: npt.NDArray[np.complex128], solver: Solver = SWEEP_SOLVER
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.complex128]]:
    """Eigenpairs of every matrix in a (b, n, n) stack, eigenvalues ascending along axis 1."""
    stack = 0.5 * (stack + np.conj(np.swapaxes(stack, -1, -2)))
    if solver == "lapack":
        values, vectors = np.linalg.eigh(stack)
        return values, vectors
    return _jacobi_stack(stack)


def eigvalsh_extremes(
    stack: npt.NDArray[np.complex128], solver: Solver = SWEEP_SOLVER
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    values, _ = eigh_stack(stack, solver=solver)
    return values[:, 0], values[:, -1]


def _off_norm(a: npt.NDArray[np.complex128]) -> npt.NDArray[np.float64]:
    diagonal = np.einsum("bii->bi", a)
    total = np.sum(np.abs(a) ** 2, axis=(1, 2)) - np.sum(np.abs(diagonal) ** 2, axis=1)
    return np.sqrt(np.maximum(total, 0.0))


def _rotate(
    a: npt.NDArray[np.complex128],
    v: npt.NDArray[np.complex128],
    p: int,
    q: int,
    threshold: npt.NDArray[np.float64],
) -> None:
    apq = a[:, p, q]
    magnitude = np.abs(apq)
    active = magnitude > threshold
    if not np.any(active):
        return
    safe = np.where(active, magnitude, 1.0)
    tau = (a[:, q, q].real - a[:, p, p].real) / (2.0 * safe)
    t = np.where(tau >= 0.0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
    c = np.where(active, 1.0 / np.hypot(1.0, t), 1.0)
    s = np.where(active, t * c, 0.0)
    # e^{-i arg a_pq}: makes the (p, q) entry real before the real rotation
    phase = np.where(active, np.conj(apq) / safe, 1.0)

    # A <- A J with J = [[c, s], [-s phase, c phase]] on columns (p, q)
    col_p = a[:, :, p].copy()
    col_q = a[:, :, q].copy()
    a[:, :, p] = c[:, None] * col_p - (s * phase)[:, None] * col_q
    a[:, :, q] = s[:, None] * col_p + (c * phase)[:, None] * col_q

    # A <- J* A on rows (p, q)
    row_p = a[:, p, :].copy()
    row_q = a[:, q, :].copy()
    a[:, p, :] = c[:, None] * row_p - (s * np.conj(phase))[:, None] * row_q
    a[:, q, :] = s[:, None] * row_p + (c * np.conj(phase))[:, None] * row_q

    a[active, p, q] = 0.0
    a[active, q, p] = 0.0
    a[:, p, p] = a[:, p, p].real
    a[:, q, q] = a[:, q, q].real

    vec_p = v[:, :, p].copy()
    vec_q = v[:, :, q].copy()
    v[:, :, p] = c[:, None] * vec_p - (s * phase)[:, None] * vec_q
    v[:, :, q] = s[:, None] * vec_p + (c * phase)[:, None] * vec_q


def _jacobi_stack(
    stack: npt.NDArray[np.complex128],
    max_sweeps: int = JACOBI_MAX_SWEEPS,
    off_rtol: float = JACOBI_OFF_RTOL,
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.complex128]]:
    a = np.array(stack, dtype=np.complex128, copy=True)
    batch, n, _ = a.shape
    v = np.broadcast_to(np.eye(n, dtype=np.complex128), (batch, n, n)).copy()
    scale = np.linalg.norm(a, axis=(1, 2))
    target = off_rtol * scale
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]

    for sweep in range(max_sweeps + 1):
        off = _off_norm(a)
        if np.all(off <= target):
            break
        if sweep == max_sweeps:
            worst = float(np.max(off / np.where(scale > 0.0, scale, 1.0)))
            log(f"❌ Jacobi did not converge after {max_sweeps} sweeps (relative off-diagonal mass {worst:.3e})")
            raise ConvergenceError(
                f"Jacobi eigensolver did not converge in {max_sweeps} sweeps", achieved=worst
            )
        if sweep < JACOBI_THRESHOLD_SWEEPS:
            threshold = 0.2 * off / (n * n)
        else:
            threshold = np.zeros(batch)
        for p, q in pairs:
            _rotate(a, v, p, q, threshold)

    values = np.real(np.einsum("bii->bi", a)).copy()
    order = np.argsort(values, axis=1, kind="stable")
    values = np.take_along_axis(values, order, axis=1)
    vectors = np.take_along_axis(v, order[:, None, :], axis=2)
    return values, vectors
