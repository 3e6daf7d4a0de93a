"""
Dense LU factorization with partial pivoting, batched over a leading axis.

Row k of P·A is row `pivots[k]` of A; `factors` packs the unit lower factor
below the diagonal and U on and above it.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from numrad.errors import InvalidInputError, SingularMatrixError
from numrad.linalg.constants import PIVOT_RTOL
from numrad.utils import ComplexMatrix, as_matrix

IntArray = npt.NDArray[np.int64]


@dataclass(frozen=True)
class LUFactorization:
    factors: ComplexMatrix
    pivots: IntArray

    @property
    def lower(self) -> ComplexMatrix:
        n = self.factors.shape[0]
        return np.tril(self.factors, -1) + np.eye(n)

    @property
    def upper(self) -> ComplexMatrix:
        return np.triu(self.factors)

    @property
    def permutation(self) -> ComplexMatrix:
        n = self.factors.shape[0]
        return np.eye(n, dtype=np.complex128)[self.pivots]

    def solve(self, rhs: object) -> ComplexMatrix:
        b = _as_rhs(rhs, self.factors.shape[0])
        x = _solve_stack(self.factors[None], self.pivots[None], b.reshape(1, b.shape[0], -1))[0]
        return x.reshape(b.shape)


def lu_factor(A: object) -> LUFactorization:
    """
    Raises:
        SingularMatrixError: If a pivot falls to 1e-14 * ||A||_F or below.
    """
    matrix = as_matrix(A)
    factors, pivots = lu_factor_stack(matrix[None])
    return LUFactorization(factors=factors[0], pivots=pivots[0])


def lu_solve(A: object, B: object) -> ComplexMatrix:
    """Solve A X = B; B is a vector of length n or an n-row matrix."""
    return lu_factor(A).solve(B)


def inverse(A: object) -> ComplexMatrix:
    matrix = as_matrix(A)
    return lu_solve(matrix, np.eye(matrix.shape[0], dtype=np.complex128))


def lu_factor_stack(
    stack: npt.NDArray[np.complex128], pivot_rtol: float = PIVOT_RTOL
) -> tuple[npt.NDArray[np.complex128], IntArray]:
    lu = np.array(stack, dtype=np.complex128, copy=True)
    batch, n, _ = lu.shape
    pivots = np.tile(np.arange(n, dtype=np.int64), (batch, 1))
    floor = pivot_rtol * np.linalg.norm(lu, axis=(1, 2))
    rows = np.arange(batch)

    for k in range(n):
        pivot_rows = k + np.argmax(np.abs(lu[:, k:, k]), axis=1)
        upper_row = lu[rows, k, :].copy()
        lu[rows, k, :] = lu[rows, pivot_rows, :]
        lu[rows, pivot_rows, :] = upper_row
        upper_index = pivots[rows, k].copy()
        pivots[rows, k] = pivots[rows, pivot_rows]
        pivots[rows, pivot_rows] = upper_index

        pivot = lu[:, k, k]
        small = np.abs(pivot) <= floor
        if np.any(small):
            worst = int(np.argmax(small))
            raise SingularMatrixError(
                f"numerically singular matrix: |pivot| = {abs(pivot[worst]):.3e} at step {k} "
                f"(threshold {floor[worst]:.3e})",
                pivot=float(abs(pivot[worst])),
                index=k,
            )
        lu[:, k + 1 :, k] /= pivot[:, None]
        lu[:, k + 1 :, k + 1 :] -= lu[:, k + 1 :, k, None] * lu[:, k, None, k + 1 :]

    return lu, pivots


def lu_solve_stack(
    stack: npt.NDArray[np.complex128], rhs: npt.NDArray[np.complex128]
) -> npt.NDArray[np.complex128]:
    """Solve stack[i] X[i] = rhs for every i; rhs is (n, m) shared or (b, n, m)."""
    lu, pivots = lu_factor_stack(stack)
    batch, n, _ = lu.shape
    if rhs.ndim == 2:
        rhs = np.broadcast_to(rhs, (batch, *rhs.shape))
    if rhs.shape[:2] != (batch, n):
        raise InvalidInputError(f"right-hand side shape {rhs.shape} does not match stack {lu.shape}")
    return _solve_stack(lu, pivots, rhs)


def _solve_stack(
    lu: npt.NDArray[np.complex128], pivots: IntArray, rhs: npt.NDArray[np.complex128]
) -> npt.NDArray[np.complex128]:
    n = lu.shape[1]
    x = np.take_along_axis(np.asarray(rhs, dtype=np.complex128), pivots[:, :, None], axis=1).copy()
    for i in range(1, n):
        x[:, i, :] -= np.einsum("bj,bjm->bm", lu[:, i, :i], x[:, :i, :])
    for i in range(n - 1, -1, -1):
        if i < n - 1:
            x[:, i, :] -= np.einsum("bj,bjm->bm", lu[:, i, i + 1 :], x[:, i + 1 :, :])
        x[:, i, :] /= lu[:, i, i, None]
    return x


def _as_rhs(rhs: object, n: int) -> ComplexMatrix:
    b = np.array(rhs, dtype=np.complex128)
    if b.ndim not in (1, 2) or b.shape[0] != n:
        raise InvalidInputError(f"B: expected {n} rows, got shape {b.shape}")
    if not np.all(np.isfinite(b)):
        raise InvalidInputError("B: entries must be finite")
    return b
