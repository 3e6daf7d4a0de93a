from abc import ABC, abstractmethod
from typing import ClassVar

from numrad.catalog.context import EvalContext
from numrad.catalog.measured import Measured
from numrad.catalog.protocol import BoundEvaluation, BoundSpec, Kind, Parameter, Predicate, Side


class BaseBound(ABC):
    """
    One registered inequality between a target quantity and a bound expression.

    Subclasses declare the registry metadata as class attributes and
    implement `lhs` (the target) and `rhs` (the bound expression); `evaluate`
    checks the applicability predicates and turns both sides into a
    BoundEvaluation.
    """

    bound_id: ClassVar[str]
    side: ClassVar[Side]
    target: ClassVar[str]
    kind: ClassVar[Kind]
    group: ClassVar[str]
    statement: ClassVar[str]
    roles: ClassVar[tuple[str, ...]] = ("A",)
    predicates: ClassVar[tuple[Predicate, ...]] = ("none",)
    parameters: ClassVar[tuple[Parameter, ...]] = ()
    signed: ClassVar[bool] = False
    baseline: ClassVar[bool] = False

    @classmethod
    def spec(cls) -> BoundSpec:
        return BoundSpec(
            id=cls.bound_id,
            side=cls.side,
            target=cls.target,
            kind=cls.kind,
            roles=list(cls.roles),
            predicates=list(cls.predicates),
            parameters=list(cls.parameters),
            group=cls.group,
            statement=cls.statement,
            baseline=cls.baseline,
        )

    @abstractmethod
    def subject_roles(self, ctx: EvalContext) -> list[str]:
        """Roles the applicability predicates are checked on."""
        ...

    @abstractmethod
    def lhs(self, ctx: EvalContext) -> Measured:
        ...

    @abstractmethod
    def rhs(self, ctx: EvalContext) -> Measured:
        ...

    def check(self, ctx: EvalContext) -> None:
        roles = self.subject_roles(ctx)
        for predicate in self.predicates:
            ctx.require(self.bound_id, predicate, roles)

    def evaluate(self, ctx: EvalContext) -> BoundEvaluation:
        """
        Raises:
            ApplicabilityError: If a predicate of the bound fails on the input.
        """
        self.check(ctx)
        lhs = self.lhs(ctx)
        rhs = self.rhs(ctx)
        slack = lhs - rhs if self.side == "lower" else rhs - lhs
        certified_error = lhs.error + rhs.error
        scale = max(abs(lhs.value), abs(rhs.value))
        return BoundEvaluation(
            bound_id=self.bound_id,
            side=self.side,
            target=self.target,
            lhs=lhs.value,
            rhs=rhs.value,
            slack=slack.value,
            certified_error=certified_error,
            holds=slack.value >= -certified_error,
            relative_slack=slack.value / scale if scale > 0.0 else 0.0,
            sign=ctx.sign if self.signed else None,
            gamma=ctx.gamma_used,
            predicates=list(self.predicates),
        )
