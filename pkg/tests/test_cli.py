import math
from pathlib import Path

import numpy as np
import pytest
from typer.testing import CliRunner

from conftest import MatrixWriter, read_json
from numrad.cli import app

runner = CliRunner()


def invoke(*args: str | Path) -> int:
    result = runner.invoke(app, [str(arg) for arg in args])
    assert result.exception is None or isinstance(result.exception, SystemExit), result.exception
    return result.exit_code


@pytest.mark.parametrize(
    "data, radius",
    [
        (np.diag([3.0 + 2.0j, 1.0]), math.sqrt(13.0)),
        (np.eye(3), 1.0),
        ([[0.0, 1.0], [0.0, 0.0]], 0.5),
    ],
)
def test_radius(write_matrix: MatrixWriter, tmp_path: Path, data: object, radius: float) -> None:
    out = tmp_path / "radius.json"
    assert invoke("--out", out, "radius", write_matrix("a", data)) == 0
    report = read_json(out)
    assert isinstance(report, dict)
    assert report["value"] == pytest.approx(radius, abs=1e-9)
    assert report["lower"] <= radius + 1e-12 and radius - 1e-12 <= report["upper"]


def test_radius_reports_the_sector(write_matrix: MatrixWriter, tmp_path: Path) -> None:
    out = tmp_path / "radius.json"
    assert invoke("--out", out, "radius", write_matrix("a", np.diag([3.0 + 2.0j, 1.0]))) == 0
    report = read_json(out)
    assert isinstance(report, dict)
    assert report["accretive"] is True
    assert report["sin_gamma"] == pytest.approx(2.0 / math.sqrt(13.0), abs=1e-12)


def test_check_holds(write_matrix: MatrixWriter, tmp_path: Path) -> None:
    out = tmp_path / "check.json"
    assert invoke("--out", out, "check", "thm-2.2", write_matrix("a", np.diag([3.0 + 2.0j, 1.0]))) == 0
    evaluation = read_json(out)
    assert isinstance(evaluation, dict)
    assert evaluation["holds"] is True
    assert evaluation["rhs"] == pytest.approx(13.0, abs=1e-9)


def test_check_evaluates_both_signs(write_matrix: MatrixWriter, tmp_path: Path) -> None:
    a = write_matrix("a", np.diag([3.0 + 2.0j, 1.0]))
    b = write_matrix("b", np.eye(2))
    out = tmp_path / "both.json"
    assert invoke("--out", out, "check", "cor-2.5", a, b) == 0
    evaluations = read_json(out)
    assert isinstance(evaluations, list) and [e["sign"] for e in evaluations] == [1, -1]
    single = tmp_path / "minus.json"
    assert invoke("--out", single, "check", "cor-2.5", a, b, "--sign", "-1") == 0
    evaluation = read_json(single)
    assert isinstance(evaluation, dict) and evaluation["sign"] == -1


def test_check_on_a_non_commuting_pair_is_not_applicable(write_matrix: MatrixWriter) -> None:
    a = write_matrix("a", np.diag([3.0 + 2.0j, 1.0]))
    b = write_matrix("b", [[1.0, 0.5], [0.0, 1.0]])
    assert invoke("check", "cor-2.17", a, b) == 3


def test_usage_errors_exit_2(write_matrix: MatrixWriter, tmp_path: Path) -> None:
    broken = tmp_path / "broken.json"
    broken.write_text('{"n": 2, "entries": [')
    assert invoke("radius", broken) == 2
    assert invoke("radius", tmp_path / "missing.json") == 2
    assert invoke("check", "thm-9.9", write_matrix("a", np.eye(2))) == 2
    assert invoke("--tol", "0", "radius", write_matrix("b", np.eye(2))) == 2


def test_domain_errors_exit_3(write_matrix: MatrixWriter) -> None:
    assert invoke("check", "thm-2.2", write_matrix("a", np.diag([1.0, -1.0]))) == 3


def test_reproduce(tmp_path: Path) -> None:
    out = tmp_path / "goldens.csv"
    assert invoke("--out", out, "--format", "csv", "reproduce") == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "quantity,value,expected,deviation,matches"
    assert len(lines) == 9
    assert all(line.endswith("true") for line in lines[1:])


def test_range_writes_boundary_csv(write_matrix: MatrixWriter, tmp_path: Path) -> None:
    out = tmp_path / "range.csv"
    assert invoke("--out", out, "range", write_matrix("a", np.diag([1.0, 1.0j])), "-N", "32") == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "theta,p,re,im"
    assert len(lines) == 33
    assert invoke("range", write_matrix("b", np.eye(2)), "-N", "4") == 2


def test_gen_writes_one_document_per_role(tmp_path: Path) -> None:
    directory = tmp_path / "inputs"
    assert invoke("--out", directory, "gen", "thm-2.4", "--trial", "3") == 0
    assert sorted(path.name for path in directory.iterdir()) == ["A.json", "B.json", "X.json", "Y.json"]
    out = tmp_path / "check.json"
    files = [directory / f"{role}.json" for role in "ABXY"]
    assert invoke("--out", out, "check", "thm-2.4", *files) == 0


def test_falsify_and_report(tmp_path: Path) -> None:
    out = tmp_path / "falsify.json"
    assert invoke("--trials", "8", "--seed", "3", "--out", out, "falsify", "thm-2.2") == 0
    report = read_json(out)
    assert isinstance(report, dict)
    assert report["trials"] == 8 and report["violations"] == 0 and "wall_time" in report
    sharp = tmp_path / "report.json"
    assert invoke("--trials", "8", "--out", sharp, "report", "base-refined", "base-quarter") == 0
    result = read_json(sharp)
    assert isinstance(result, dict)
    assert result["conditions"][0] == {"condition": "all", "samples": 8, "dominant": 8, "fraction": 1.0}


def test_falsify_with_an_ensemble_file(tmp_path: Path) -> None:
    ensemble = tmp_path / "ensemble.json"
    ensemble.write_text('{"kind": "sectorial", "n": 3, "gamma_target": 0.7}')
    out = tmp_path / "falsify.json"
    assert invoke("--trials", "4", "--out", out, "falsify", "lem-2.9", "--ensemble", ensemble) == 0
    ensemble.write_text('{"kind": "generic"}')
    assert invoke("--trials", "4", "falsify", "lem-2.9", "--ensemble", ensemble) == 2


def test_catalog(tmp_path: Path) -> None:
    out = tmp_path / "catalog.csv"
    assert invoke("--out", out, "--format", "csv", "catalog") == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("id,side,target,kind")
    assert len(lines) == 45
