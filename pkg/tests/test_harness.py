import json
import math
from pathlib import Path

import numpy as np
import pytest

from numrad.catalog import EvalContext, InequalityInput
from numrad.catalog.registry import REGISTRY, get_bound, list_catalog
from numrad.errors import InvalidInputError, ParseError
from numrad.generators import EnsembleSpec, stream
from numrad.harness import MatrixDocument, NumradSettings, falsify, reproduce, sharpness
from numrad.harness.harness import condition_holds, slack_histogram
from numrad.harness.io import parse_document, read_matrix, render
from numrad.harness.reproduce import remark_matrix
from numrad.harness.trials import build_input, matched_ensemble, matched_kind

# A = I + iS with ||S|| >= tan(1.3): ||Im A|| > ||Re A|| on every sample
IM_DOMINANT = EnsembleSpec(kind="sectorial", n_range=(2, 6), gamma_range=(1.3, 1.5), modulus_range=(1.0, 1.0))


@pytest.mark.parametrize(
    "bound_id",
    ["thm-2.2", "base-refined", "cor-2.5", "cor-2.7", "lem-2.9", "thm-2.12", "prop-2.8", "lem-2.15", "cor-2.17",
     "thm-3.1", "thm-3.5", "thm-3.7"],
)
def test_no_violations_on_matched_inputs(settings: NumradSettings, bound_id: str) -> None:
    report = falsify(bound_id, settings, trials=20)
    assert report.violations == 0
    assert report.trials == 20
    per_trial = 2 if get_bound(bound_id).signed else 1
    assert report.evaluations + report.skipped * per_trial == 20 * per_trial
    assert report.min_slack_witness is not None
    assert sum(bucket.count for bucket in report.slack_histogram) == report.evaluations


@pytest.mark.parametrize("bound_id", [spec.id for spec in list_catalog()])
def test_every_bound_survives_a_short_sweep(settings: NumradSettings, bound_id: str) -> None:
    report = falsify(bound_id, settings, trials=10)
    assert report.violations == 0, report.min_slack_witness
    per_trial = 2 if get_bound(bound_id).signed else 1
    assert report.evaluations + report.skipped * per_trial == 10 * per_trial


def test_reports_do_not_depend_on_the_worker_count(settings: NumradSettings) -> None:
    serial = falsify("cor-2.5", settings.model_copy(update={"max_workers": 1}), trials=12)
    parallel = falsify("cor-2.5", settings.model_copy(update={"max_workers": 6}), trials=12)
    assert serial.deterministic_json() == parallel.deterministic_json()


def test_seed_changes_the_inputs(settings: NumradSettings) -> None:
    first = falsify("thm-2.2", settings, trials=5, seed=1)
    second = falsify("thm-2.2", settings, trials=5, seed=2)
    assert first.min_slack != second.min_slack


def test_empty_sweep(settings: NumradSettings) -> None:
    report = falsify("thm-2.2", settings, trials=0)
    assert report.evaluations == 0
    assert report.min_slack == math.inf
    assert report.min_slack_witness is None
    assert json.loads(report.deterministic_json())["min_slack"] == math.inf
    with pytest.raises(InvalidInputError):
        falsify("thm-2.2", settings, trials=-1)


def test_witness_reproduces_the_smallest_slack(settings: NumradSettings) -> None:
    report = falsify("thm-2.2", settings, trials=10)
    witness = report.min_slack_witness
    assert witness is not None and list(witness.matrices) == ["A"]
    data = InequalityInput(matrices={role: doc.to_matrix() for role, doc in witness.matrices.items()})
    assert REGISTRY["thm-2.2"].evaluate(EvalContext(data)).slack == pytest.approx(witness.slack, abs=1e-9)


def test_mismatched_ensembles_are_rejected(settings: NumradSettings) -> None:
    with pytest.raises(InvalidInputError):
        falsify("cor-2.17", settings, trials=1, ensemble=EnsembleSpec(kind="sectorial", gamma_target=0.5))
    with pytest.raises(InvalidInputError):
        falsify("thm-2.2", settings, trials=1, ensemble=EnsembleSpec(kind="sectorial"))


def test_matched_ensembles(settings: NumradSettings) -> None:
    assert matched_kind(get_bound("thm-3.1")) == "cone"
    assert matched_kind(get_bound("lem-2.15")) == "double-commuting"
    assert matched_kind(get_bound("lem-2.9-ad")) == "accretive-dissipative"
    assert matched_kind(get_bound("thm-2.2")) == "sectorial"
    assert matched_kind(get_bound("eq-1.1-lower")) == "generic"
    spec = matched_ensemble(get_bound("lem-2.15"), settings)
    data = build_input(get_bound("lem-2.15"), spec, stream(0, 0))
    assert sorted(data.matrices) == ["A_1", "A_2", "B_1", "B_2"]


def test_trial_inputs_carry_parameters(settings: NumradSettings) -> None:
    bound = get_bound("thm-2.12")
    data = build_input(bound, matched_ensemble(bound, settings), stream(3, 4))
    assert data.n_halvings is not None and 1 <= data.n_halvings <= 4
    commutator = get_bound("thm-2.4")
    data = build_input(commutator, matched_ensemble(commutator, settings), stream(3, 4))
    assert sorted(data.matrices) == ["A", "B", "X", "Y"]


def test_sharper_bounds_dominate_when_the_imaginary_part_does(settings: NumradSettings) -> None:
    lower = sharpness("thm-2.2", "base-quarter", settings, trials=20, ensemble=IM_DOMINANT)
    assert lower.side == "lower" and lower.target == "w^2(A)"
    assert lower.fraction("im-dominant") == 1.0
    assert lower.conditions[1].samples == 20
    upper = sharpness("cor-2.5", "base-fong", settings, trials=20, ensemble=IM_DOMINANT)
    assert upper.fraction("im-dominant") == 1.0
    assert upper.fraction("re-dominant") is None


def test_refined_baseline_dominates_the_quarter_bound(settings: NumradSettings) -> None:
    report = sharpness("base-refined", "base-quarter", settings, trials=15)
    assert report.fraction() == 1.0
    assert report.skipped == 0


@pytest.mark.parametrize("bound_a, bound_b", [("thm-3.5", "base-1p"), ("thm-3.7", "base-2p")])
def test_cone_bounds_dominate_their_baselines(settings: NumradSettings, bound_a: str, bound_b: str) -> None:
    report = sharpness(bound_a, bound_b, settings, trials=15)
    assert report.fraction() == 1.0


def test_sharpness_needs_a_common_target(settings: NumradSettings) -> None:
    with pytest.raises(InvalidInputError):
        sharpness("thm-2.2", "eq-1.1-lower", settings, trials=1)
    with pytest.raises(InvalidInputError):
        sharpness("eq-1.1-lower", "eq-1.1-upper", settings, trials=1)


def test_conditions_on_the_remark_matrix() -> None:
    facts = EvalContext(InequalityInput(matrices={"A": remark_matrix()})).facts("A")
    gamma = facts.sector.value
    assert condition_holds("all", facts, None)
    assert condition_holds("re-dominant", facts, gamma)
    assert not condition_holds("im-dominant", facts, gamma)
    assert condition_holds("cartesian-threshold", facts, gamma)
    assert condition_holds("commutator-threshold", facts, gamma)
    assert condition_holds("cartesian-threshold", facts, None) is None


def test_slack_histogram_buckets() -> None:
    buckets = slack_histogram([-1.0, 0.0, 5e-13, 0.05, 2.0])
    counts = [bucket.count for bucket in buckets]
    assert counts == [1, 2, 0, 0, 0, 0, 1, 0, 1]
    assert buckets[0].low == -math.inf and buckets[-1].high == math.inf


def test_reproduce_matches_every_golden() -> None:
    rows = reproduce()
    assert len(rows) == 8
    assert all(row.matches for row in rows), [row for row in rows if not row.matches]


def test_render_formats() -> None:
    rows = reproduce()
    csv = render(rows, "csv")
    assert csv.splitlines()[0] == "quantity,value,expected,deviation,matches"
    assert len(csv.splitlines()) == 9
    assert isinstance(json.loads(render(rows, "json")), list)
    assert json.loads(render(rows[:1], "json"))["quantity"] == "w^2(A)"
    assert "thm-2.2 rhs" in render(rows, "table")


@pytest.mark.parametrize(
    "text, location",
    [
        ('{"n": 2, "entries": [', "line 1, column 22"),
        ('{"n": 0, "entries": []}', "n"),
        ('{"n": 1, "entries": [[[1.0, "x"]]]}', "entries[0][0][1]"),
        ('{"n": 2, "entries": [[[1, 0]]]}', "<root>"),
        ('{"n": 1, "entries": [[[1, 0]]], "m": 3}', "m"),
    ],
)
def test_parse_errors_carry_their_location(text: str, location: str) -> None:
    with pytest.raises(ParseError) as info:
        parse_document(text, MatrixDocument, "a.json")
    assert info.value.location == location
    assert str(info.value).startswith("a.json: ")


def test_missing_files_are_parse_errors(tmp_path: Path) -> None:
    with pytest.raises(ParseError) as info:
        read_matrix(tmp_path / "missing.json")
    assert info.value.location == "file"


def test_matrix_documents_round_trip_complex_entries() -> None:
    a = np.array([[1.0 + 2.0j, -0.5j], [3.0, 0.0]])
    np.testing.assert_array_equal(MatrixDocument.from_matrix(a).to_matrix(), a)
