from numrad.base import BaseBound
from numrad.catalog.cartesian.cartesian import (
    CartesianLower,
    CartesianMax,
    ImaginaryPart,
    NormEquivalenceLower,
    NormEquivalenceUpper,
    QuarterLower,
    RefinedLower,
    SectorCosine,
)
from numrad.catalog.commutator.commutator import (
    ClassicalCommutator,
    Commutator,
    RefinedCommutator,
    SymmetricCommutator,
    WeightedCommutator,
)
from numrad.catalog.cone.cone import (
    ConeNorm,
    ConeNormLower,
    ConeNormWeak,
    ConeProduct,
    ConeProductWeak,
    ConeSquareLower,
    NormLowerBaseline,
    RotatedConeNorm,
    RotatedConeProduct,
    SectorNormLower,
    SquareLowerBaseline,
)
from numrad.catalog.context import EvalContext
from numrad.catalog.powers.powers import (
    NormCartesian,
    NormCartesianDissipative,
    NormRatio,
    NormRatioDissipative,
    RootChain,
    RootChainDissipative,
    RootSum,
    RootSumRadius,
    RootSumRadiusDissipative,
    SplitPowerNorm,
    SplitPowerNormCrossed,
    SplitPowerRadius,
    SplitPowerRadiusCrossed,
    SquareRoot,
    SquareRootDissipative,
)
from numrad.catalog.products.products import (
    DissipativeProduct,
    DoubleCommutingProduct,
    DoubleCommutingProducts,
    SectorialProduct,
    SectorialProducts,
)
from numrad.catalog.protocol import BoundEvaluation, BoundSpec, InequalityInput, Kind
from numrad.errors import InvalidInputError

BOUND_CLASSES: list[type[BaseBound]] = [
    NormEquivalenceLower,
    NormEquivalenceUpper,
    SectorCosine,
    ImaginaryPart,
    CartesianLower,
    CartesianMax,
    QuarterLower,
    RefinedLower,
    WeightedCommutator,
    Commutator,
    SymmetricCommutator,
    ClassicalCommutator,
    RefinedCommutator,
    NormRatio,
    NormRatioDissipative,
    NormCartesian,
    NormCartesianDissipative,
    RootSum,
    RootSumRadius,
    RootSumRadiusDissipative,
    SquareRoot,
    SquareRootDissipative,
    RootChain,
    RootChainDissipative,
    SplitPowerNorm,
    SplitPowerNormCrossed,
    SplitPowerRadius,
    SplitPowerRadiusCrossed,
    DoubleCommutingProducts,
    SectorialProducts,
    DoubleCommutingProduct,
    SectorialProduct,
    DissipativeProduct,
    ConeNorm,
    ConeNormWeak,
    RotatedConeNorm,
    ConeProduct,
    ConeProductWeak,
    RotatedConeProduct,
    SectorNormLower,
    ConeNormLower,
    NormLowerBaseline,
    ConeSquareLower,
    SquareLowerBaseline,
]

REGISTRY: dict[str, BaseBound] = {cls.bound_id: cls() for cls in BOUND_CLASSES}

if len(REGISTRY) != len(BOUND_CLASSES):
    raise RuntimeError("bound ids must be unique")


def list_catalog() -> list[BoundSpec]:
    """Metadata of every registered bound, in registry order."""
    return [bound.spec() for bound in REGISTRY.values()]


def get_bound(bound_id: str) -> BaseBound:
    """
    Raises:
        InvalidInputError: If no bound is registered under `bound_id`.
    """
    try:
        return REGISTRY[bound_id]
    except KeyError:
        raise InvalidInputError(f"unknown bound id '{bound_id}'") from None


def as_context(data: InequalityInput | EvalContext) -> EvalContext:
    return data if isinstance(data, EvalContext) else EvalContext(data)


def evaluate(bound_id: str, data: InequalityInput | EvalContext) -> BoundEvaluation:
    """
    Evaluate any registered bound on `data`.

    Raises:
        InvalidInputError: For an unknown id or missing roles.
        ApplicabilityError: If a predicate of the bound fails.
    """
    return get_bound(bound_id).evaluate(as_context(data))


def _evaluate_kind(kind: Kind, bound_id: str, data: InequalityInput | EvalContext) -> BoundEvaluation:
    bound = get_bound(bound_id)
    if bound.kind != kind:
        raise InvalidInputError(f"'{bound_id}' is a {bound.kind} bound, not a {kind} bound")
    return bound.evaluate(as_context(data))


def evaluate_single(bound_id: str, data: InequalityInput | EvalContext) -> BoundEvaluation:
    return _evaluate_kind("single", bound_id, data)


def evaluate_commutator(bound_id: str, data: InequalityInput | EvalContext) -> BoundEvaluation:
    """Evaluates the sign carried by the input; use `evaluate_both_signs` for the +- pair."""
    return _evaluate_kind("commutator", bound_id, data)


def evaluate_family(bound_id: str, data: InequalityInput | EvalContext) -> BoundEvaluation:
    return _evaluate_kind("family", bound_id, data)


def evaluate_both_signs(bound_id: str, data: InequalityInput | EvalContext) -> list[BoundEvaluation]:
    """[+, -] evaluations of a signed bound sharing one context; a single evaluation otherwise."""
    bound = get_bound(bound_id)
    ctx = as_context(data)
    if not bound.signed:
        return [bound.evaluate(ctx)]
    return [bound.evaluate(ctx.with_sign(sign)) for sign in (1, -1)]
