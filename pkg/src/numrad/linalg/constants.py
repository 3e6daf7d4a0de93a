from typing import Literal

Solver = Literal["jacobi", "lapack"]

# Hermitian eigensolver
DEFAULT_SOLVER: Solver = "jacobi"  # single solves: the reference solver
SWEEP_SOLVER: Solver = "lapack"  # batched angle sweeps
JACOBI_MAX_SWEEPS = 30
JACOBI_OFF_RTOL = 1e-13  # stop when off-diagonal Frobenius mass <= this * ||H||_F
JACOBI_THRESHOLD_SWEEPS = 3  # early sweeps skip rotations below 0.2 * off / n^2
HERMITIAN_RTOL = 1e-10  # accepted ||H - H*||_F / ||H||_F before symmetrizing

# LU with partial pivoting
PIVOT_RTOL = 1e-14  # |pivot| <= this * ||A||_F is singular

# Operator norm, relative accuracy of sqrt(lambda_max(A*A))
NORM_RTOL = 1e-12
