import numpy as np

from numrad.errors import ConvergenceError, DomainError
from numrad.fov import is_accretive
from numrad.linalg import inverse
from numrad.matfun.constants import DB_MAX_ITERATIONS, DB_RTOL
from numrad.utils import ComplexMatrix, as_matrix, frobenius_norm, log


def _require_accretive(a: ComplexMatrix) -> None:
    accretive, delta = is_accretive(a)
    if not accretive:
        raise DomainError(f"matrix is not accretive: lambda_min(Re A) = {delta:.6g}")


def sqrt_db(A: object, max_iterations: int = DB_MAX_ITERATIONS, rtol: float = DB_RTOL) -> ComplexMatrix:
    """
    Principal square root by the coupled Denman-Beavers iteration.

    X_{k+1} = (X_k + Y_k^{-1})/2, Y_{k+1} = (Y_k + X_k^{-1})/2 from X_0 = A,
    Y_0 = I, followed by one Newton step X <- (X + X^{-1} A)/2.

    Raises:
        DomainError: If A is not accretive.
        SingularMatrixError: If an iterate cannot be inverted.
        ConvergenceError: If the step does not fall below rtol * ||X||_F.
    """
    a = as_matrix(A)
    _require_accretive(a)
    x = a.copy()
    y = np.eye(a.shape[0], dtype=np.complex128)
    step = np.inf
    for _ in range(max_iterations):
        x_next = 0.5 * (x + inverse(y))
        y = 0.5 * (y + inverse(x))
        step = frobenius_norm(x_next - x)
        converged = step <= rtol * frobenius_norm(x)
        x = x_next
        if converged:
            break
    else:
        achieved = step / max(frobenius_norm(x), np.finfo(np.float64).tiny)
        log(f"❌ Denman-Beavers stalled after {max_iterations} iterations (relative step {achieved:.3e})")
        raise ConvergenceError(f"Denman-Beavers did not converge in {max_iterations} iterations", achieved=achieved)
    return 0.5 * (x + inverse(x) @ a)
