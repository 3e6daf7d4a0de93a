from numrad.matfun.contour import contour_for, fractional_power, matrix_power, power_chain, trapezoid_power
from numrad.matfun.protocol import ContourSpec, PowerResult
from numrad.matfun.sqrt import sqrt_db

__all__ = [
    "ContourSpec",
    "PowerResult",
    "contour_for",
    "fractional_power",
    "matrix_power",
    "power_chain",
    "sqrt_db",
    "trapezoid_power",
]
