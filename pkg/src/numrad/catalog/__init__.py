"""
The inequality catalog. Bound implementations live in the group sub-packages
and are collected in `numrad.catalog.registry`.
"""

from numrad.catalog.context import EvalContext, MatrixFacts
from numrad.catalog.measured import Measured
from numrad.catalog.protocol import BoundEvaluation, BoundSpec, InequalityInput

__all__ = ["BoundEvaluation", "BoundSpec", "EvalContext", "InequalityInput", "Measured", "MatrixFacts"]
