from typing import ClassVar

from numrad.base.bound import BaseBound
from numrad.catalog.context import EvalContext, MatrixFacts
from numrad.catalog.measured import Measured
from numrad.catalog.protocol import Kind


class SingleMatrixBound(BaseBound):
    """A bound on a quantity of the single matrix A."""

    kind: ClassVar[Kind] = "single"
    roles: ClassVar[tuple[str, ...]] = ("A",)

    def subject_roles(self, ctx: EvalContext) -> list[str]:
        return ["A"]

    def a(self, ctx: EvalContext) -> MatrixFacts:
        return ctx.facts("A")

    def gamma(self, ctx: EvalContext) -> Measured:
        return ctx.gamma(self.bound_id, ["A"])
