"""
Bounds on w(A) and w^2(A) through the Cartesian decomposition A = Re A + i Im A.
"""

from typing import ClassVar

from numrad.base import SingleMatrixBound
from numrad.catalog.context import EvalContext
from numrad.catalog.measured import Measured, cos, csc, mmax, sin
from numrad.catalog.protocol import Predicate, Side

GROUP = "cartesian"


class NormEquivalenceLower(SingleMatrixBound):
    bound_id = "eq-1.1-lower"
    side: ClassVar[Side] = "lower"
    target = "w(A)"
    group = GROUP
    statement = "||A|| / 2 <= w(A)"
    baseline = True

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius

    def rhs(self, ctx: EvalContext) -> Measured:
        return 0.5 * self.a(ctx).norm


class NormEquivalenceUpper(SingleMatrixBound):
    bound_id = "eq-1.1-upper"
    side: ClassVar[Side] = "upper"
    target = "w(A)"
    group = GROUP
    statement = "w(A) <= ||A||"
    baseline = True

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius

    def rhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).norm


class SectorCosine(SingleMatrixBound):
    bound_id = "eq-1.2-cos"
    side: ClassVar[Side] = "lower"
    target = "w(A)"
    group = GROUP
    statement = "cos(gamma) ||A|| <= w(A)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial",)

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius

    def rhs(self, ctx: EvalContext) -> Measured:
        return cos(self.gamma(ctx)) * self.a(ctx).norm


class ImaginaryPart(SingleMatrixBound):
    bound_id = "lem-2.1-im"
    side: ClassVar[Side] = "upper"
    target = "||Im A||"
    group = GROUP
    statement = "||Im A|| <= sin(gamma) w(A)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial",)

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).im_norm

    def rhs(self, ctx: EvalContext) -> Measured:
        return sin(self.gamma(ctx)) * self.a(ctx).radius


class CartesianLower(SingleMatrixBound):
    """The sectorial refinement of w^2(A) >= ||AA* + A*A|| / 4."""

    bound_id = "thm-2.2"
    side: ClassVar[Side] = "lower"
    target = "w^2(A)"
    group = GROUP
    statement = "w^2(A) >= csc^2(gamma)/4 ||AA* + A*A|| + csc^2(gamma)/2 (||Im A||^2 - ||Re A||^2)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial_nonzero",)

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius ** 2

    def rhs(self, ctx: EvalContext) -> Measured:
        a = self.a(ctx)
        csc2 = csc(self.gamma(ctx)) ** 2
        return csc2 / 4 * a.sym_norm + csc2 / 2 * (a.im_norm**2 - a.re_norm**2)


class CartesianMax(SingleMatrixBound):
    bound_id = "thm-2.2-max"
    side: ClassVar[Side] = "lower"
    target = "w^2(A)"
    group = GROUP
    statement = "w^2(A) >= max{||Re A||^2, csc^2(gamma) ||Im A||^2}"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial_nonzero",)

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius ** 2

    def rhs(self, ctx: EvalContext) -> Measured:
        a = self.a(ctx)
        return mmax(a.re_norm**2, csc(self.gamma(ctx)) ** 2 * a.im_norm**2)


class QuarterLower(SingleMatrixBound):
    bound_id = "base-quarter"
    side: ClassVar[Side] = "lower"
    target = "w^2(A)"
    group = GROUP
    statement = "w^2(A) >= ||A*A + AA*|| / 4"
    baseline = True

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius ** 2

    def rhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).sym_norm / 4


class RefinedLower(SingleMatrixBound):
    bound_id = "base-refined"
    side: ClassVar[Side] = "lower"
    target = "w^2(A)"
    group = GROUP
    statement = "w^2(A) >= ||A*A + AA*|| / 4 + | ||Re A||^2 - ||Im A||^2 | / 2"
    baseline = True

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius ** 2

    def rhs(self, ctx: EvalContext) -> Measured:
        a = self.a(ctx)
        return a.sym_norm / 4 + abs(a.re_norm**2 - a.im_norm**2) / 2
