from typing import Any

import numpy as np
import numpy.typing as npt

from numrad.errors import InvalidInputError
from numrad.linalg.constants import DEFAULT_SOLVER, Solver
from numrad.linalg.eigen import hermitian_eig
from numrad.utils import ComplexMatrix, as_matrix, frobenius_norm


def _conforming(A: object, B: object) -> tuple[ComplexMatrix, ComplexMatrix]:
    a = as_matrix(A, "A")
    b = as_matrix(B, "B")
    if a.shape != b.shape:
        raise InvalidInputError(f"dimension mismatch: A is {a.shape}, B is {b.shape}")
    return a, b


def add(A: object, B: object) -> ComplexMatrix:
    a, b = _conforming(A, B)
    return a + b


def subtract(A: object, B: object) -> ComplexMatrix:
    a, b = _conforming(A, B)
    return a - b


def matmul(A: object, B: object) -> ComplexMatrix:
    a, b = _conforming(A, B)
    return a @ b


def adjoint(A: object) -> ComplexMatrix:
    return as_matrix(A).conj().T.copy()


def scale(alpha: complex, A: object) -> ComplexMatrix:
    if not np.isfinite(alpha):
        raise InvalidInputError(f"scale factor must be finite, got {alpha}")
    return complex(alpha) * as_matrix(A)


def cartesian_parts(A: object) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Re(A) = (A + A*)/2 and Im(A) = (A - A*)/(2i), both Hermitian."""
    a = as_matrix(A)
    a_star = a.conj().T
    return 0.5 * (a + a_star), (a - a_star) / 2j


def operator_norm(A: object, solver: Solver = DEFAULT_SOLVER) -> float:
    """
    Largest singular value, computed as sqrt(lambda_max(A* A)).

    Args:
        A: Square matrix.
        solver: Hermitian eigensolver used for A* A.

    Returns:
        ||A||; exactly 0.0 for the zero matrix.
    """
    a = as_matrix(A)
    if frobenius_norm(a) == 0.0:
        return 0.0
    gram = a.conj().T @ a
    return float(np.sqrt(max(hermitian_eig(gram, solver=solver).max, 0.0)))


def commutator_residual(A: object, B: object) -> float:
    """||AB - BA||_F."""
    a, b = _conforming(A, B)
    return frobenius_norm(a @ b - b @ a)


def adjoint_commutator_residual(A: object, B: object) -> float:
    """||AB* - B*A||_F."""
    a, b = _conforming(A, B)
    b_star = b.conj().T
    return frobenius_norm(a @ b_star - b_star @ a)


def is_hermitian(A: npt.NDArray[Any], rtol: float = 1e-12) -> bool:
    return frobenius_norm(A - A.conj().T) <= rtol * max(frobenius_norm(A), 1.0)


def is_normal(A: object, rtol: float = 1e-10) -> bool:
    a = as_matrix(A)
    return commutator_residual(a, a.conj().T) <= rtol * max(frobenius_norm(a) ** 2, 1.0)


def hermitian_function(H: object, func: Any, solver: Solver = DEFAULT_SOLVER) -> ComplexMatrix:
    """V f(Lambda) V* for Hermitian H and an elementwise `func` on the eigenvalues."""
    eig = hermitian_eig(H, solver=solver)
    return (eig.vectors * func(eig.values)[None, :]) @ eig.vectors.conj().T
