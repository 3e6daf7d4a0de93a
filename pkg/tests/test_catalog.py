import math

import numpy as np
import pytest
from pydantic import ValidationError

from conftest import random_matrix
from numrad.catalog import BoundEvaluation, EvalContext, InequalityInput, Measured
from numrad.catalog.registry import (
    REGISTRY,
    evaluate,
    evaluate_both_signs,
    evaluate_commutator,
    evaluate_family,
    evaluate_single,
    get_bound,
    list_catalog,
)
from numrad.errors import ApplicabilityError, InvalidInputError
from numrad.fov import numerical_radius
from numrad.generators import EnsembleSpec, gen_double_commuting, gen_sectorial, sample, stream
from numrad.harness.trials import roles_for_files
from numrad.linalg import cartesian_parts, operator_norm
from numrad.utils import ComplexMatrix

SQRT13 = math.sqrt(13.0)


def remark_input(remark: ComplexMatrix, **matrices: ComplexMatrix) -> InequalityInput:
    return InequalityInput(matrices={"A": remark, **matrices})


def test_registry_holds_every_bound_once() -> None:
    specs = list_catalog()
    assert len(specs) == len(REGISTRY) == 44
    assert len({spec.id for spec in specs}) == 44
    assert {spec.group for spec in specs} == {"cartesian", "commutator", "powers", "products", "cone"}
    assert all(spec.statement for spec in specs)


def test_unknown_ids_are_rejected() -> None:
    with pytest.raises(InvalidInputError):
        get_bound("thm-9.9")


@pytest.mark.parametrize(
    "bound_id, lhs, rhs",
    [
        ("thm-2.2", 13.0, 13.0),
        ("base-quarter", 13.0, 6.5),
        ("base-refined", 13.0, 9.0),
        ("eq-1.1-lower", SQRT13, SQRT13 / 2),
        ("eq-1.1-upper", SQRT13, SQRT13),
        ("lem-2.1-im", 2.0, 2.0),
    ],
)
def test_remark_values(remark: ComplexMatrix, bound_id: str, lhs: float, rhs: float) -> None:
    evaluation = evaluate(bound_id, remark_input(remark))
    assert evaluation.lhs == pytest.approx(lhs, abs=1e-9)
    assert evaluation.rhs == pytest.approx(rhs, abs=1e-9)
    assert evaluation.holds
    assert evaluation.certified_error < 1e-6


def test_remark_attains_the_cartesian_bound(remark: ComplexMatrix) -> None:
    evaluation = evaluate("thm-2.2", remark_input(remark))
    assert abs(evaluation.slack) <= evaluation.certified_error + 1e-9
    assert evaluation.gamma == pytest.approx(math.atan(2.0 / 3.0), abs=1e-12)


def test_commutator_bound_with_identity_is_attained(remark: ComplexMatrix) -> None:
    evaluations = evaluate_both_signs("cor-2.5", remark_input(remark, B=np.eye(2, dtype=np.complex128)))
    assert [e.sign for e in evaluations] == [1, -1]
    plus, minus = evaluations
    assert plus.lhs == pytest.approx(2.0 * SQRT13, abs=1e-9)
    assert plus.rhs == pytest.approx(2.0 * SQRT13, abs=1e-9)
    assert minus.lhs == pytest.approx(0.0, abs=1e-12)
    assert plus.holds and minus.holds


def test_both_signs_of_a_random_commutator(rng: np.random.Generator) -> None:
    a = gen_sectorial(EnsembleSpec(kind="sectorial", n=4, gamma_target=0.6), rng)
    data = InequalityInput(matrices={"A": a, "B": random_matrix(rng, 4), "X": random_matrix(rng, 4)})
    for bound_id in ("thm-2.4", "cor-2.5", "base-fong", "base-kitt-comm"):
        evaluations = evaluate_both_signs(bound_id, data)
        assert len(evaluations) == 2
        assert all(e.holds for e in evaluations)
    single = evaluate_commutator("cor-2.5", data.with_sign(-1))
    assert single.sign == -1


def test_unsigned_bounds_evaluate_once(remark: ComplexMatrix) -> None:
    evaluations = evaluate_both_signs("thm-2.2", remark_input(remark))
    assert len(evaluations) == 1 and evaluations[0].sign is None


def test_kind_specific_evaluators(remark: ComplexMatrix) -> None:
    assert evaluate_single("thm-2.2", remark_input(remark)).bound_id == "thm-2.2"
    with pytest.raises(InvalidInputError):
        evaluate_single("cor-2.5", remark_input(remark, B=np.eye(2)))
    with pytest.raises(InvalidInputError):
        evaluate_family("thm-2.2", remark_input(remark))


def test_non_commuting_pair_is_not_applicable(remark: ComplexMatrix) -> None:
    with pytest.raises(ApplicabilityError) as info:
        evaluate("cor-2.17", remark_input(remark, B=np.array([[1.0, 0.5], [0.0, 1.0]])))
    assert info.value.predicate == "double_commuting"
    assert info.value.bound_id == "cor-2.17"


def test_double_commuting_pair_holds() -> None:
    family = gen_double_commuting(EnsembleSpec(kind="double-commuting", n=4, gamma_target=0.9, family_size=2))
    evaluation = evaluate("cor-2.17", InequalityInput(matrices={"A": family[0], "B": family[1]}))
    assert evaluation.holds
    assert evaluation.predicates == ["sectorial", "double_commuting"]


def test_non_accretive_matrix_is_not_applicable() -> None:
    with pytest.raises(ApplicabilityError) as info:
        evaluate("thm-2.2", InequalityInput(matrices={"A": np.diag([1.0, -1.0])}))
    assert info.value.predicate == "sectorial_nonzero"


def test_hermitian_matrix_has_no_usable_sector() -> None:
    with pytest.raises(ApplicabilityError):
        evaluate("thm-2.2", InequalityInput(matrices={"A": np.diag([1.0, 2.0])}))
    assert evaluate("lem-2.9", InequalityInput(matrices={"A": np.diag([1.0, 2.0])})).holds


def test_supplied_gamma(remark: ComplexMatrix) -> None:
    with pytest.raises(ApplicabilityError):
        evaluate("lem-2.9", InequalityInput(matrices={"A": remark}, gamma=0.3))
    evaluation = evaluate("lem-2.9", InequalityInput(matrices={"A": remark}, gamma=1.0))
    assert evaluation.gamma == 1.0
    assert evaluation.holds


def test_family_bounds_read_every_member() -> None:
    family = gen_double_commuting(EnsembleSpec(kind="double-commuting", n=3, gamma_target=0.5, family_size=4))
    data = InequalityInput(matrices={"A_1": family[0], "A_2": family[1], "B_1": family[2], "B_2": family[3]})
    for bound_id in ("lem-2.15", "thm-2.16"):
        assert evaluate(bound_id, data).holds
    uneven = InequalityInput(matrices={"A_1": family[0], "A_2": family[1], "B_1": family[2]})
    with pytest.raises(InvalidInputError):
        evaluate("lem-2.15", uneven)


def test_parameters_reach_the_bound() -> None:
    a = gen_sectorial(EnsembleSpec(kind="sectorial", n=3, gamma_target=0.8), stream(2))
    for n_halvings in (1, 3):
        evaluation = evaluate("thm-2.12", InequalityInput(matrices={"A": a}, n_halvings=n_halvings))
        assert evaluation.holds
    b = gen_sectorial(EnsembleSpec(kind="sectorial", n=3, gamma_target=0.4), stream(3))
    assert evaluate("thm-2.2", InequalityInput(matrices={"A": a})).holds
    assert evaluate("lem-2.9", InequalityInput(matrices={"A": b}, alpha=0.3)).holds


def test_context_is_shared_between_signs(remark: ComplexMatrix) -> None:
    ctx = EvalContext(remark_input(remark, B=np.eye(2)))
    first = ctx.facts("A")
    assert ctx.with_sign(-1).facts("A") is first
    assert ctx.with_sign(-1).sign == -1


def test_roles_for_files(remark: ComplexMatrix) -> None:
    i = np.eye(2, dtype=np.complex128)
    assert list(roles_for_files(get_bound("lem-2.15"), [remark, i, remark, i])) == ["A_1", "A_2", "B_1", "B_2"]
    assert list(roles_for_files(get_bound("prop-2.8"), [remark, i, i])) == ["A_1", "A_2", "A_3"]
    assert list(roles_for_files(get_bound("thm-2.4"), [remark, i, i])) == ["A", "B", "X"]
    with pytest.raises(InvalidInputError):
        roles_for_files(get_bound("lem-2.15"), [remark, i, i])
    with pytest.raises(InvalidInputError):
        roles_for_files(get_bound("thm-2.2"), [remark, i])
    with pytest.raises(InvalidInputError):
        roles_for_files(get_bound("cor-2.5"), [remark])


@pytest.mark.parametrize(
    "fields",
    [
        {"matrices": {"C": np.eye(2)}},
        {"matrices": {"A": np.eye(2), "B": np.eye(3)}},
        {"matrices": {"A": np.eye(2)}, "alpha": 1.0},
        {"matrices": {"A": np.eye(2)}, "sign": 0},
        {"matrices": {"A": np.eye(2)}, "n_halvings": 7},
        {"matrices": {"A": np.eye(2)}, "gamma": 2.0},
        {"matrices": {}},
    ],
)
def test_inequality_input_validation(fields: dict[str, object]) -> None:
    with pytest.raises(InvalidInputError):
        InequalityInput(**fields)  # type: ignore[arg-type]


def test_evaluation_must_be_consistent() -> None:
    fields: dict[str, object] = dict(
        bound_id="thm-2.2", side="lower", target="w^2(A)", lhs=1.0, rhs=2.0, slack=-1.0, relative_slack=-0.5
    )
    with pytest.raises(ValidationError):
        BoundEvaluation(certified_error=0.1, holds=True, **fields)  # type: ignore[arg-type]
    assert not BoundEvaluation(certified_error=0.1, holds=False, **fields).holds  # type: ignore[arg-type]


def test_measured_arithmetic() -> None:
    x = Measured(4.0, 0.1)
    assert (x + 1).value == 5.0 and (x + 1).error == 0.1
    assert (x * 2).error == pytest.approx(0.2)
    root = x.sqrt()
    assert root.value == 2.0
    assert root.lower <= math.sqrt(3.9) and math.sqrt(4.1) <= root.upper
    assert (1.0 / Measured(0.0, 0.1)).error == math.inf
    with pytest.raises(ValueError):
        x**0


def cartesian_threshold(a: ComplexMatrix) -> float:
    """sqrt(1 - (||Re A||^2 - ||Im A||^2) / ||Re^2 A + Im^2 A||)."""
    re, im = cartesian_parts(a)
    ratio = (operator_norm(re) ** 2 - operator_norm(im) ** 2) / operator_norm(re @ re + im @ im)
    return math.sqrt(max(1.0 - ratio, 0.0))


@pytest.mark.parametrize(
    "a, dominates",
    [(np.diag([3.0 + 2.0j, 1.0]), True), (np.diag([10.0, 1.0 + 1.4j]), False)],
)
def test_cartesian_bound_beats_the_quarter_bound_below_the_threshold(a: ComplexMatrix, dominates: bool) -> None:
    data = InequalityInput(matrices={"A": a})
    sharper, quarter = evaluate("thm-2.2", data), evaluate("base-quarter", data)
    assert (sharper.rhs >= quarter.rhs) is dominates
    assert (math.sin(sharper.gamma or 0.0) <= cartesian_threshold(a)) is dominates


def test_cartesian_threshold_decides_dominance_on_samples() -> None:
    spec = EnsembleSpec(kind="sectorial", n_range=(2, 5), gamma_range=(0.05, 1.5), modulus_range=(0.2, 5.0))
    checked = 0
    for index in range(40):
        (a,) = sample(spec, stream(61, index))
        data = InequalityInput(matrices={"A": a})
        sharper, quarter = evaluate("thm-2.2", data), evaluate("base-quarter", data)
        gap = sharper.rhs - quarter.rhs
        if abs(gap) <= sharper.certified_error + quarter.certified_error + 1e-9:
            continue
        below = math.sin(sharper.gamma or 0.0) <= cartesian_threshold(a)
        assert (gap > 0) is below, index
        checked += 1
    assert checked >= 30


@pytest.mark.parametrize("gamma_target", [1.4, 0.5, 1e-3])
def test_double_commuting_factor_lies_between_one_and_two(gamma_target: float) -> None:
    a, b = gen_double_commuting(
        EnsembleSpec(kind="double-commuting", n=3, gamma_target=gamma_target, family_size=2), stream(9)
    )
    evaluation = evaluate("cor-2.17", InequalityInput(matrices={"A": a, "B": b}))
    factor = evaluation.rhs / (numerical_radius(a).value * numerical_radius(b).value)
    assert 1.0 <= factor < 2.0
    assert factor == pytest.approx(1.0 + math.sin(evaluation.gamma or 0.0) ** 2, rel=1e-9)
    assert factor - 1.0 <= math.sin(gamma_target + 1e-8) ** 2 + 1e-9


def test_symmetric_commutator_is_the_smaller_swapped_bound() -> None:
    a = gen_sectorial(EnsembleSpec(kind="sectorial", n=3, gamma_target=0.5), stream(4))
    b = gen_sectorial(EnsembleSpec(kind="sectorial", n=3, gamma_target=0.9), stream(5))
    for gamma in (None, 1.0):
        symmetric = evaluate("cor-2.7", InequalityInput(matrices={"A": a, "B": b}, gamma=gamma))
        common = symmetric.gamma
        forward = evaluate("cor-2.5", InequalityInput(matrices={"A": a, "B": b}, gamma=common))
        swapped = evaluate("cor-2.5", InequalityInput(matrices={"A": b, "B": a}, gamma=common))
        assert symmetric.rhs == pytest.approx(min(forward.rhs, swapped.rhs), rel=1e-12)


def test_weighted_commutator_vanishes_without_weights(remark: ComplexMatrix) -> None:
    zero = np.zeros((2, 2), dtype=np.complex128)
    b = np.array([[1.0, 2.0j], [0.5, -1.0]])
    for evaluation in evaluate_both_signs("thm-2.4", remark_input(remark, B=b, X=zero, Y=zero)):
        assert evaluation.lhs == pytest.approx(0.0, abs=1e-12)
        assert evaluation.rhs == pytest.approx(0.0, abs=1e-12)
        assert evaluation.holds
