from numrad.linalg.core import (
    add,
    adjoint,
    adjoint_commutator_residual,
    cartesian_parts,
    commutator_residual,
    hermitian_function,
    is_hermitian,
    is_normal,
    matmul,
    operator_norm,
    scale,
    subtract,
)
from numrad.linalg.eigen import HermitianEigen, eigh_stack, hermitian_eig
from numrad.linalg.lu import LUFactorization, inverse, lu_factor, lu_solve, lu_solve_stack

__all__ = [
    "HermitianEigen",
    "LUFactorization",
    "add",
    "adjoint",
    "adjoint_commutator_residual",
    "cartesian_parts",
    "commutator_residual",
    "eigh_stack",
    "hermitian_eig",
    "hermitian_function",
    "inverse",
    "is_hermitian",
    "is_normal",
    "lu_factor",
    "lu_solve",
    "lu_solve_stack",
    "matmul",
    "operator_norm",
    "scale",
    "subtract",
]
