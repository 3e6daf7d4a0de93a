from typing import ClassVar

from numrad.base.bound import BaseBound
from numrad.catalog.context import EvalContext, MatrixFacts
from numrad.catalog.measured import Measured
from numrad.catalog.protocol import Kind, Parameter


class CommutatorBound(BaseBound):
    """
    An upper bound on w(AXB +- BYA).

    Bounds without X and Y roles read the plain commutator-type sum
    AB +- BA; for the others a missing X or Y is the identity.
    """

    kind: ClassVar[Kind] = "commutator"
    roles: ClassVar[tuple[str, ...]] = ("A", "B")
    parameters: ClassVar[tuple[Parameter, ...]] = ("sign",)
    signed: ClassVar[bool] = True
    target: ClassVar[str] = "w(AB+-BA)"
    subjects: ClassVar[tuple[str, ...]] = ("A",)

    def subject_roles(self, ctx: EvalContext) -> list[str]:
        return list(self.subjects)

    def uses_weights(self) -> bool:
        return "X" in self.roles

    def combination(self, ctx: EvalContext) -> MatrixFacts:
        a, b = ctx.facts("A"), ctx.facts("B")
        sign = "+" if ctx.sign > 0 else "-"
        if not self.uses_weights():
            return ctx.combine(f"AB{sign}BA", [(1.0, [a, b]), (float(ctx.sign), [b, a])])
        x, y = ctx.role_or_identity("X"), ctx.role_or_identity("Y")
        return ctx.combine(f"AXB{sign}BYA", [(1.0, [a, x, b]), (float(ctx.sign), [b, y, a])])

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.combination(ctx).radius

    def gamma(self, ctx: EvalContext) -> Measured:
        return ctx.gamma(self.bound_id, self.subject_roles(ctx))
