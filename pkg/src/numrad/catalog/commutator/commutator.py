"""
Upper bounds on the numerical radius of generalized commutators AXB +- BYA.
"""

import math
from typing import ClassVar

from numrad.base import CommutatorBound
from numrad.catalog.context import EvalContext, MatrixFacts
from numrad.catalog.measured import Measured, csc, mmax, mmin, sin
from numrad.catalog.protocol import Predicate, Side

GROUP = "commutator"
TWO_SQRT2 = 2.0 * math.sqrt(2.0)


def sectorial_root(a: MatrixFacts, gamma: Measured) -> Measured:
    """sqrt(w^2(A) - csc^2(gamma)/2 (||Im A||^2 - ||Re A||^2)), non-negative whenever the cartesian bound holds."""
    return (a.radius**2 - csc(gamma) ** 2 / 2 * (a.im_norm**2 - a.re_norm**2)).sqrt()


class WeightedCommutator(CommutatorBound):
    bound_id = "thm-2.4"
    side: ClassVar[Side] = "upper"
    target = "w(AXB+-BYA)"
    group = GROUP
    statement = (
        "w(AXB +- BYA) <= 2 sqrt(2) sin(gamma) ||B|| max{||X||, ||Y||} "
        "sqrt(w^2(A) - csc^2(gamma)/2 (||Im A||^2 - ||Re A||^2))"
    )
    roles: ClassVar[tuple[str, ...]] = ("A", "B", "X", "Y")
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial_nonzero",)

    def rhs(self, ctx: EvalContext) -> Measured:
        gamma = self.gamma(ctx)
        weight = mmax(ctx.role_or_identity("X").norm, ctx.role_or_identity("Y").norm)
        return TWO_SQRT2 * sin(gamma) * ctx.facts("B").norm * weight * sectorial_root(ctx.facts("A"), gamma)


class Commutator(CommutatorBound):
    bound_id = "cor-2.5"
    side: ClassVar[Side] = "upper"
    group = GROUP
    statement = "w(AB +- BA) <= 2 sqrt(2) sin(gamma) ||B|| sqrt(w^2(A) - csc^2(gamma)/2 (||Im A||^2 - ||Re A||^2))"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial_nonzero",)

    def rhs(self, ctx: EvalContext) -> Measured:
        gamma = self.gamma(ctx)
        return TWO_SQRT2 * sin(gamma) * ctx.facts("B").norm * sectorial_root(ctx.facts("A"), gamma)


class SymmetricCommutator(CommutatorBound):
    """min of the commutator bound and its role-swapped counterpart under one common gamma."""

    bound_id = "cor-2.7"
    side: ClassVar[Side] = "upper"
    group = GROUP
    statement = "w(AB +- BA) <= min{beta_1, beta_2}, beta_2 the commutator bound with A and B interchanged"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial_nonzero",)
    subjects: ClassVar[tuple[str, ...]] = ("A", "B")

    def betas(self, ctx: EvalContext) -> tuple[Measured, Measured]:
        gamma = self.gamma(ctx)
        a, b = ctx.facts("A"), ctx.facts("B")
        beta_1 = TWO_SQRT2 * sin(gamma) * b.norm * sectorial_root(a, gamma)
        beta_2 = TWO_SQRT2 * sin(gamma) * a.norm * sectorial_root(b, gamma)
        return beta_1, beta_2

    def rhs(self, ctx: EvalContext) -> Measured:
        return mmin(*self.betas(ctx))


class ClassicalCommutator(CommutatorBound):
    bound_id = "base-fong"
    side: ClassVar[Side] = "upper"
    group = GROUP
    statement = "w(AB +- BA) <= 2 sqrt(2) ||B|| w(A)"
    baseline = True

    def rhs(self, ctx: EvalContext) -> Measured:
        return TWO_SQRT2 * ctx.facts("B").norm * ctx.facts("A").radius


class RefinedCommutator(CommutatorBound):
    bound_id = "base-kitt-comm"
    side: ClassVar[Side] = "upper"
    group = GROUP
    statement = "w(AB +- BA) <= 2 sqrt(2) ||B|| sqrt(w^2(A) - | ||Re A||^2 - ||Im A||^2 | / 2)"
    baseline = True

    def rhs(self, ctx: EvalContext) -> Measured:
        a = ctx.facts("A")
        return TWO_SQRT2 * ctx.facts("B").norm * (a.radius**2 - abs(a.re_norm**2 - a.im_norm**2) / 2).sqrt()
