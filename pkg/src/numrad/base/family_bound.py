from typing import ClassVar

from numrad.base.bound import BaseBound
from numrad.catalog.context import EvalContext, MatrixFacts
from numrad.catalog.measured import Measured
from numrad.catalog.protocol import Kind
from numrad.errors import InvalidInputError


class FamilyBound(BaseBound):
    """
    A bound on a sum or product over a family A_1..A_n (optionally paired
    with B_1..B_n), or over the pair A, B.

    `families` lists the role prefixes read; a bare A or B is a family of one.
    """

    kind: ClassVar[Kind] = "family"
    families: ClassVar[tuple[str, ...]] = ("A",)

    def members(self, ctx: EvalContext, prefix: str) -> list[str]:
        roles = ctx.data.family(prefix)
        if not roles:
            raise InvalidInputError(f"{self.bound_id}: missing matrix role '{prefix}' or '{prefix}_1'")
        return roles

    def subject_roles(self, ctx: EvalContext) -> list[str]:
        groups = [self.members(ctx, prefix) for prefix in self.families]
        if len({len(group) for group in groups}) > 1:
            sizes = ", ".join(f"{prefix}: {len(group)}" for prefix, group in zip(self.families, groups))
            raise InvalidInputError(f"{self.bound_id}: families must have equal sizes ({sizes})")
        return [role for group in groups for role in group]

    def member_facts(self, ctx: EvalContext, prefix: str) -> list[MatrixFacts]:
        return [ctx.facts(role) for role in self.members(ctx, prefix)]

    def gamma(self, ctx: EvalContext) -> Measured:
        return ctx.gamma(self.bound_id, self.subject_roles(ctx))


class PairBound(FamilyBound):
    """A family bound on exactly one A and one B."""

    families: ClassVar[tuple[str, ...]] = ("A", "B")
    roles: ClassVar[tuple[str, ...]] = ("A", "B")

    def subject_roles(self, ctx: EvalContext) -> list[str]:
        for prefix in self.families:
            if not ctx.data.has(prefix):
                raise InvalidInputError(f"{self.bound_id}: missing matrix role '{prefix}'")
        return list(self.families)

    def pair(self, ctx: EvalContext) -> tuple[MatrixFacts, MatrixFacts]:
        return ctx.facts("A"), ctx.facts("B")
