"""
Norm-to-radius constants of sectorial matrices and their consequences for
square roots, root chains, sums and fractional powers.
"""

from typing import ClassVar

from numrad.base import FamilyBound, PairBound, SingleMatrixBound
from numrad.base.bound import BaseBound
from numrad.catalog.constants import DEFAULT_ALPHA, DEFAULT_HALVINGS
from numrad.catalog.context import EvalContext
from numrad.catalog.measured import Measured, msum, sin
from numrad.catalog.protocol import Parameter, Predicate, Side
from numrad.errors import ApplicabilityError

GROUP = "powers"


def norm_factor(gamma: Measured, dissipative: bool) -> Measured:
    """sqrt(1 + 2 sin^2 gamma), or sqrt(1 + sin^2 gamma) for accretive-dissipative matrices."""
    weight = 1.0 if dissipative else 2.0
    return (1.0 + weight * sin(gamma) ** 2).sqrt()


def halvings(ctx: EvalContext) -> int:
    return ctx.data.n_halvings if ctx.data.n_halvings is not None else DEFAULT_HALVINGS


def alpha(ctx: EvalContext) -> float:
    return ctx.data.alpha if ctx.data.alpha is not None else DEFAULT_ALPHA


def require_dissipative_roots(bound: BaseBound, ctx: EvalContext, roles: list[str], n_halvings: int) -> None:
    """The accretive-dissipative constant is applied to every root A^{1/2^k}, k <= n."""
    for role in roles:
        for k in range(1, n_halvings + 1):
            if not ctx.root(role, k).accretive_dissipative:
                raise ApplicabilityError(
                    bound.bound_id, "accretive_dissipative", f"{role}^(1/2^{k}) is not accretive-dissipative"
                )


class NormRatio(SingleMatrixBound):
    bound_id = "lem-2.9"
    side: ClassVar[Side] = "upper"
    target = "||A||"
    group = GROUP
    statement = "||A|| <= sqrt(1 + 2 sin^2(gamma)) w(A)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial",)
    dissipative: ClassVar[bool] = False

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).norm

    def rhs(self, ctx: EvalContext) -> Measured:
        return norm_factor(self.gamma(ctx), self.dissipative) * self.a(ctx).radius


class NormRatioDissipative(NormRatio):
    bound_id = "lem-2.9-ad"
    statement = "||A|| <= sqrt(1 + sin^2(gamma)) w(A)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("accretive_dissipative",)
    dissipative: ClassVar[bool] = True


class NormCartesian(SingleMatrixBound):
    bound_id = "lem-2.9-cartesian"
    side: ClassVar[Side] = "upper"
    target = "||A||^2"
    group = GROUP
    statement = "||A||^2 <= ||Re A||^2 + 2 ||Im A||^2"
    predicates: ClassVar[tuple[Predicate, ...]] = ("accretive",)
    im_weight: ClassVar[float] = 2.0

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).norm ** 2

    def rhs(self, ctx: EvalContext) -> Measured:
        a = self.a(ctx)
        return a.re_norm**2 + self.im_weight * a.im_norm**2


class NormCartesianDissipative(NormCartesian):
    bound_id = "lem-2.9-cartesian-ad"
    statement = "||A||^2 <= ||Re A||^2 + ||Im A||^2"
    predicates: ClassVar[tuple[Predicate, ...]] = ("accretive_dissipative",)
    im_weight: ClassVar[float] = 1.0


class RootChain(SingleMatrixBound):
    """
    w^{1/2^n}(A) <= prod_{i=1}^n (1 + 2 sin^2(gamma/2^i))^{1/2^{n+1-i}} w(A^{1/2^n}),
    with A^{1/2^n} from the square-root chain.
    """

    bound_id = "thm-2.12"
    side: ClassVar[Side] = "upper"
    target = "w^(1/2^n)(A)"
    group = GROUP
    statement = "w^(1/2^n)(A) <= prod_{i=1..n} (1 + 2 sin^2(gamma/2^i))^(1/2^(n+1-i)) w(A^(1/2^n))"
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial",)
    parameters: ClassVar[tuple[Parameter, ...]] = ("n_halvings",)
    dissipative: ClassVar[bool] = False

    def halvings(self, ctx: EvalContext) -> int:
        return halvings(ctx)

    def check(self, ctx: EvalContext) -> None:
        super().check(ctx)
        if self.dissipative:
            require_dissipative_roots(self, ctx, ["A"], self.halvings(ctx))

    def lhs(self, ctx: EvalContext) -> Measured:
        return self.a(ctx).radius ** (2.0 ** -self.halvings(ctx))

    def rhs(self, ctx: EvalContext) -> Measured:
        n = self.halvings(ctx)
        gamma = self.gamma(ctx)
        weight = 1.0 if self.dissipative else 2.0
        factor = Measured.exact(1.0)
        for i in range(1, n + 1):
            factor = factor * (1.0 + weight * sin(gamma / 2**i) ** 2) ** (2.0 ** -(n + 1 - i))
        return factor * ctx.root("A", n).radius


class RootChainDissipative(RootChain):
    bound_id = "thm-2.12-ad"
    statement = "w^(1/2^n)(A) <= prod_{i=1..n} (1 + sin^2(gamma/2^i))^(1/2^(n+1-i)) w(A^(1/2^n))"
    predicates: ClassVar[tuple[Predicate, ...]] = ("accretive_dissipative",)
    dissipative: ClassVar[bool] = True


class SquareRoot(RootChain):
    """The single-halving case of the root chain."""

    bound_id = "cor-2.11"
    target = "w^(1/2)(A)"
    statement = "w^(1/2)(A) <= sqrt(1 + 2 sin^2(gamma/2)) w(A^(1/2))"
    parameters: ClassVar[tuple[Parameter, ...]] = ()

    def halvings(self, ctx: EvalContext) -> int:
        return 1


class SquareRootDissipative(SquareRoot):
    bound_id = "cor-2.11-ad"
    statement = "w^(1/2)(A) <= sqrt(1 + sin^2(gamma/2)) w(A^(1/2))"
    predicates: ClassVar[tuple[Predicate, ...]] = ("accretive_dissipative",)
    dissipative: ClassVar[bool] = True


class RootSum(FamilyBound):
    bound_id = "prop-2.8"
    side: ClassVar[Side] = "upper"
    target = "||sum A_i||^(1/2)"
    group = GROUP
    statement = "||sum_i A_i||^(1/2) <= sum_i ||A_i^(1/2)||"
    roles: ClassVar[tuple[str, ...]] = ("A_i",)
    predicates: ClassVar[tuple[Predicate, ...]] = ("accretive",)

    def lhs(self, ctx: EvalContext) -> Measured:
        members = self.member_facts(ctx, "A")
        total = ctx.combine("sum(A_i)", [(1.0, [f]) for f in members])
        return total.norm.sqrt()

    def rhs(self, ctx: EvalContext) -> Measured:
        return msum([ctx.root(role, 1).norm for role in self.members(ctx, "A")])


class RootSumRadius(FamilyBound):
    bound_id = "cor-2.10"
    side: ClassVar[Side] = "upper"
    target = "w^(1/2)(sum A_i)"
    group = GROUP
    statement = "w^(1/2)(sum_i A_i) <= sqrt(1 + 2 sin^2(gamma/2)) sum_i w(A_i^(1/2))"
    roles: ClassVar[tuple[str, ...]] = ("A_i",)
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial",)
    dissipative: ClassVar[bool] = False

    def check(self, ctx: EvalContext) -> None:
        super().check(ctx)
        if self.dissipative:
            require_dissipative_roots(self, ctx, self.subject_roles(ctx), 1)

    def lhs(self, ctx: EvalContext) -> Measured:
        members = self.member_facts(ctx, "A")
        total = ctx.combine("sum(A_i)", [(1.0, [f]) for f in members])
        return total.radius.sqrt()

    def rhs(self, ctx: EvalContext) -> Measured:
        roots = msum([ctx.root(role, 1).radius for role in self.members(ctx, "A")])
        return norm_factor(self.gamma(ctx) / 2, self.dissipative) * roots


class RootSumRadiusDissipative(RootSumRadius):
    bound_id = "cor-2.10-ad"
    statement = "w^(1/2)(sum_i A_i) <= sqrt(1 + sin^2(gamma/2)) sum_i w(A_i^(1/2))"
    predicates: ClassVar[tuple[Predicate, ...]] = ("accretive_dissipative",)
    dissipative: ClassVar[bool] = True


class SplitPowerNorm(PairBound):
    """
    ||A + B|| through the factorization of A + B into the blocks
    [A^a, B^a] and [A^(1-a); B^(1-a)]; `crossed` swaps the exponents of B.
    """

    bound_id = "prop-2.13-i"
    side: ClassVar[Side] = "upper"
    target = "||A+B||"
    group = GROUP
    statement = "||A+B|| <= (||A^a|| + ||B^a||)(||A^(1-a)|| + ||B^(1-a)||)"
    predicates: ClassVar[tuple[Predicate, ...]] = ("accretive",)
    parameters: ClassVar[tuple[Parameter, ...]] = ("alpha",)
    crossed: ClassVar[bool] = False

    def lhs(self, ctx: EvalContext) -> Measured:
        a, b = self.pair(ctx)
        return ctx.combine("A+B", [(1.0, [a]), (1.0, [b])]).norm

    def rhs(self, ctx: EvalContext) -> Measured:
        t = alpha(ctx)
        a_first, a_second = ctx.power("A", t).norm, ctx.power("A", 1.0 - t).norm
        b_first, b_second = ctx.power("B", t).norm, ctx.power("B", 1.0 - t).norm
        if self.crossed:
            b_first, b_second = b_second, b_first
        return (a_first + b_first) * (a_second + b_second)


class SplitPowerNormCrossed(SplitPowerNorm):
    bound_id = "prop-2.13-ii"
    statement = "||A+B|| <= (||A^a|| + ||B^(1-a)||)(||A^(1-a)|| + ||B^a||)"
    crossed: ClassVar[bool] = True


class SplitPowerRadius(PairBound):
    bound_id = "cor-2.14-i"
    side: ClassVar[Side] = "upper"
    target = "w(A+B)"
    group = GROUP
    statement = (
        "w(A+B) <= sqrt(1 + 2 sin^2(a gamma)) sqrt(1 + 2 sin^2((1-a) gamma)) "
        "(w(A^a) + w(B^a))(w(A^(1-a)) + w(B^(1-a)))"
    )
    predicates: ClassVar[tuple[Predicate, ...]] = ("sectorial",)
    parameters: ClassVar[tuple[Parameter, ...]] = ("alpha",)

    def lhs(self, ctx: EvalContext) -> Measured:
        a, b = self.pair(ctx)
        return ctx.combine("A+B", [(1.0, [a]), (1.0, [b])]).radius

    def factors(self, ctx: EvalContext) -> tuple[float, Measured, Measured]:
        t = alpha(ctx)
        gamma = self.gamma(ctx)
        return t, norm_factor(t * gamma, False), norm_factor((1.0 - t) * gamma, False)

    def rhs(self, ctx: EvalContext) -> Measured:
        t, s_first, s_second = self.factors(ctx)
        first = ctx.power("A", t).radius + ctx.power("B", t).radius
        second = ctx.power("A", 1.0 - t).radius + ctx.power("B", 1.0 - t).radius
        return s_first * s_second * first * second


class SplitPowerRadiusCrossed(SplitPowerRadius):
    bound_id = "cor-2.14-ii"
    statement = (
        "w(A+B) <= (s_a w(A^a) + s_(1-a) w(B^(1-a)))(s_(1-a) w(A^(1-a)) + s_a w(B^a)), "
        "s_t = sqrt(1 + 2 sin^2(t gamma))"
    )

    def rhs(self, ctx: EvalContext) -> Measured:
        t, s_first, s_second = self.factors(ctx)
        left = s_first * ctx.power("A", t).radius + s_second * ctx.power("B", 1.0 - t).radius
        right = s_second * ctx.power("A", 1.0 - t).radius + s_first * ctx.power("B", t).radius
        return left * right


