"""
Bounds for matrices whose numerical range lies in a cone
{r e^(-+i theta) : theta1 <= theta <= theta2} on one side of the real axis.

Such an A and its quarter-turn rotation both lie in the sector of half-angle
gamma1 = max{theta2, pi/2 - theta1}.
"""

import math
from typing import ClassVar

from numrad.base import SingleMatrixBound
from numrad.catalog.context import EvalContext
from numrad.catalog.measured import Measured, cos, csc, mmax, sin
from numrad.catalog.products.products import ProductPair
from numrad.catalog.protocol import Predicate, Side

GROUP = "cone"
HALF_PI = 0.5 * math.pi


def cone_angles(bound_id: str, ctx: EvalContext, roles: list[str]) -> tuple[Measured, Measured]:
    """(theta1, theta2) of the cone shared by `roles`."""
    cone, error = ctx.cone(bound_id, roles)
    return Measured(cone.theta1, error), Measured(cone.theta2, error)


def cone_gamma(bound_id: str, ctx: EvalContext, roles: list[str]) -> Measured:
    theta1, theta2 = cone_angles(bound_id, ctx, roles)
    return mmax(theta2, HALF_PI - theta1)


class ConeNorm(SingleMatrixBound):
    bound_id = "thm-3.1"
    side: ClassVar[Side] = "upper"
    target = "||A||"
    group = GROUP
    statement = "||A|| <= sqrt(1 + cos^2(theta1)) w(A)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("cone",)

    def factor(self, ctx: EvalContext) -> Measured:
        theta1, _ = cone_angles(self.bound_id, ctx, ["A"])
        return (1.0 + cos(theta1) ** 2).sqrt()

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).norm

    def rhs(self, ctx: EvalContext) -> Measured:
        return self.factor(ctx) * self.a(ctx).radius


class ConeNormWeak(ConeNorm):
    bound_id = "thm-3.1-weak"
    statement = "||A|| <= sqrt(2) w(A)"

    def factor(self, ctx: EvalContext) -> Measured:
        return Measured.exact(math.sqrt(2.0))


class RotatedConeNorm(ConeNorm):
    """Rotating the cone onto the real axis leaves a sector of half-angle (theta2 - theta1)/2."""

    bound_id = "eq-3.2-rot"
    statement = "||A|| <= sqrt(1 + 2 sin^2((theta2 - theta1)/2)) w(A)"

    def factor(self, ctx: EvalContext) -> Measured:
        theta1, theta2 = cone_angles(self.bound_id, ctx, ["A"])
        return (1.0 + 2.0 * sin((theta2 - theta1) / 2) ** 2).sqrt()


class SectorNormLower(SingleMatrixBound):
    bound_id = "lem-3.4"
    side: ClassVar[Side] = "lower"
    target = "w(A)"
    group = GROUP
    statement = "w(A) >= csc(gamma)/2 ||A|| + csc(gamma)/2 (||Im A|| - ||Re A||)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial_nonzero",)

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius

    def rhs(self, ctx: EvalContext) -> Measured:
        a = self.a(ctx)
        half_csc = csc(self.gamma(ctx)) / 2
        return half_csc * a.norm + half_csc * (a.im_norm - a.re_norm)


class ConeNormLower(SingleMatrixBound):
    bound_id = "thm-3.5"
    side: ClassVar[Side] = "lower"
    target = "w(A)"
    group = GROUP
    statement = "w(A) >= csc(gamma1)/2 ||A|| + csc(gamma1)/2 | ||Im A|| - ||Re A|| |"
    predicates: ClassVar[tuple[Predicate, ...]] = ("cone",)

    def weight(self, ctx: EvalContext) -> Measured:
        return csc(cone_gamma(self.bound_id, ctx, ["A"]))

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius

    def rhs(self, ctx: EvalContext) -> Measured:
        a = self.a(ctx)
        return self.weight(ctx) / 2 * (a.norm + abs(a.im_norm - a.re_norm))


class NormLowerBaseline(ConeNormLower):
    bound_id = "base-1p"
    statement = "w(A) >= ||A||/2 + | ||Im A|| - ||Re A|| | / 2"
    predicates: ClassVar[tuple[Predicate, ...]] = ("none",)
    baseline = True

    def weight(self, ctx: EvalContext) -> Measured:
        return Measured.exact(1.0)


class ConeSquareLower(SingleMatrixBound):
    bound_id = "thm-3.7"
    side: ClassVar[Side] = "lower"
    target = "w^2(A)"
    group = GROUP
    statement = "w^2(A) >= csc^2(gamma1)/4 ||AA* + A*A|| + csc^2(gamma1)/2 | ||Im A||^2 - ||Re A||^2 |"
    predicates: ClassVar[tuple[Predicate, ...]] = ("cone",)

    def weight(self, ctx: EvalContext) -> Measured:
        return csc(cone_gamma(self.bound_id, ctx, ["A"])) ** 2

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius ** 2

    def rhs(self, ctx: EvalContext) -> Measured:
        a = self.a(ctx)
        weight = self.weight(ctx)
        return weight / 4 * a.sym_norm + weight / 2 * abs(a.im_norm**2 - a.re_norm**2)


class SquareLowerBaseline(ConeSquareLower):
    """Same expression as base-refined, registered under its own id for the cone comparison."""

    bound_id = "base-2p"
    statement = "w^2(A) >= ||AA* + A*A||/4 + | ||Im A||^2 - ||Re A||^2 | / 2"
    predicates: ClassVar[tuple[Predicate, ...]] = ("none",)
    baseline = True

    def weight(self, ctx: EvalContext) -> Measured:
        return Measured.exact(1.0)


class ConeProduct(ProductPair):
    bound_id = "thm-3.3"
    group = GROUP
    statement = "w(AB) <= (1 + cos^2(theta1)) w(A) w(B)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("cone",)

    def factor(self, ctx: EvalContext) -> Measured:
        theta1, _ = cone_angles(self.bound_id, ctx, ["A", "B"])
        return 1.0 + cos(theta1) ** 2


class ConeProductWeak(ConeProduct):
    bound_id = "thm-3.3-weak"
    statement = "w(AB) <= 2 w(A) w(B)"

    def factor(self, ctx: EvalContext) -> Measured:
        return Measured.exact(2.0)


class RotatedConeProduct(ConeProduct):
    bound_id = "eq-3.4-rot"
    statement = "w(AB) <= (1 + 2 sin^2((theta2 - theta1)/2)) w(A) w(B)"

    def factor(self, ctx: EvalContext) -> Measured:
        theta1, theta2 = cone_angles(self.bound_id, ctx, ["A", "B"])
        return 1.0 + 2.0 * sin((theta2 - theta1) / 2) ** 2
