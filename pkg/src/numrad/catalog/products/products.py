"""
Numerical radius of products and sums of products, for double commuting and
for general sectorial operands.
"""

from abc import abstractmethod
from typing import ClassVar

from numrad.base import FamilyBound, PairBound
from numrad.catalog.context import EvalContext
from numrad.catalog.measured import Measured, msum, sin
from numrad.catalog.protocol import Predicate, Side

GROUP = "products"


class ProductSum(FamilyBound):
    """Shared left-hand side w(sum_i A_i B_i)."""

    target = "w(sum A_i B_i)"
    families: ClassVar[tuple[str, ...]] = ("A", "B")
    roles: ClassVar[tuple[str, ...]] = ("A_i", "B_i")

    def lhs(self, ctx: EvalContext) -> Measured:
        terms = [
            (1.0, [ctx.facts(a), ctx.facts(b)]) for a, b in zip(self.members(ctx, "A"), self.members(ctx, "B"))
        ]
        return ctx.combine("sum(A_i B_i)", terms).radius


class DoubleCommutingProducts(ProductSum):
    bound_id = "lem-2.15"
    side: ClassVar[Side] = "upper"
    group = GROUP
    statement = (
        "w(sum_i A_i B_i) <= 1/2 ||sum_i A_i* A_i + A_i A_i*||^(1/2) ||sum_i B_i* B_i + B_i B_i*||^(1/2)"
    )
    predicates: ClassVar[tuple[Predicate, ...]] = ("double_commuting",)

    def rhs(self, ctx: EvalContext) -> Measured:
        a_sum = ctx.sym_sum(self.member_facts(ctx, "A"))
        b_sum = ctx.sym_sum(self.member_facts(ctx, "B"))
        return 0.5 * a_sum.sqrt() * b_sum.sqrt()


class SectorialProducts(ProductSum):
    bound_id = "thm-2.16"
    side: ClassVar[Side] = "upper"
    group = GROUP
    statement = "w(sum_i A_i B_i) <= (1 + sin^2(gamma)) (sum_i w^2(A_i))^(1/2) (sum_i w^2(B_i))^(1/2)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial", "double_commuting")

    def rhs(self, ctx: EvalContext) -> Measured:
        gamma = self.gamma(ctx)
        a_sum = msum([f.radius**2 for f in self.member_facts(ctx, "A")])
        b_sum = msum([f.radius**2 for f in self.member_facts(ctx, "B")])
        return (1.0 + sin(gamma) ** 2) * a_sum.sqrt() * b_sum.sqrt()


class ProductPair(PairBound):
    """Shared left-hand side w(AB) and the factor form c(gamma) w(A) w(B)."""

    target = "w(AB)"
    side: ClassVar[Side] = "upper"

    def lhs(self, ctx: EvalContext) -> Measured:
        a, b = self.pair(ctx)
        return ctx.combine("AB", [(1.0, [a, b])]).radius

    @abstractmethod
    def factor(self, ctx: EvalContext) -> Measured:
        ...

    def rhs(self, ctx: EvalContext) -> Measured:
        a, b = self.pair(ctx)
        return self.factor(ctx) * a.radius * b.radius


class DoubleCommutingProduct(ProductPair):
    bound_id = "cor-2.17"
    group = GROUP
    statement = "w(AB) <= (1 + sin^2(gamma)) w(A) w(B)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial", "double_commuting")

    def factor(self, ctx: EvalContext) -> Measured:
        return 1.0 + sin(self.gamma(ctx)) ** 2


class SectorialProduct(ProductPair):
    bound_id = "lem-3.2"
    group = GROUP
    statement = "w(AB) <= (1 + 2 sin^2(gamma)) w(A) w(B)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial",)

    def factor(self, ctx: EvalContext) -> Measured:
        return 1.0 + 2.0 * sin(self.gamma(ctx)) ** 2


class DissipativeProduct(ProductPair):
    bound_id = "lem-3.2-ad"
    group = GROUP
    statement = "w(AB) <= (1 + sin^2(gamma)) w(A) w(B)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("accretive_dissipative",)

    def factor(self, ctx: EvalContext) -> Measured:
        return 1.0 + sin(self.gamma(ctx)) ** 2
