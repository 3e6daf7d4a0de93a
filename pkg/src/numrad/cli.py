"""
numrad command line.

Exit codes: 0 success (or the inequality holds), 1 violation, golden
mismatch or numerical failure, 2 usage or parse error, 3 applicability or
domain error.
"""

from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Annotated, Any, Iterator, List, Optional

import typer
from dotenv import find_dotenv, load_dotenv
from pydantic import ValidationError

from numrad.catalog import InequalityInput
from numrad.catalog.registry import evaluate_both_signs, get_bound, list_catalog
from numrad.errors import ApplicabilityError, DomainError, InvalidInputError, NumradError, ParseError
from numrad.fov import boundary_polygon, is_accretive, numerical_radius, sectorial_index
from numrad.fov.constants import DEFAULT_BOUNDARY_POINTS
from numrad.generators import stream
from numrad.harness import NumradSettings, falsify, falsify_catalog, reproduce, sharpness
from numrad.harness.harness import resolve_ensemble
from numrad.harness.io import boundary_frame, frame_csv, matrix_json, read_ensemble, read_matrix, render, write_text
from numrad.harness.protocol import Format, RadiusReport
from numrad.harness.trials import build_input, context_for, roles_for_files
from numrad.linalg import operator_norm
from numrad.utils import log

app = typer.Typer(no_args_is_help=True, add_completion=False)


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"
    table = "table"


FORMATS: dict[OutputFormat, Format] = {OutputFormat.json: "json", OutputFormat.csv: "csv", OutputFormat.table: "table"}


@dataclass
class CliState:
    settings: NumradSettings
    out: Path | None
    fmt: Format


@contextmanager
def guard() -> Iterator[None]:
    """Map numrad errors onto the exit-code contract."""
    try:
        yield
    except (ParseError, InvalidInputError) as e:
        log(f"❌ {e}")
        raise typer.Exit(2) from e
    except (ApplicabilityError, DomainError) as e:
        log(f"❌ {e}")
        raise typer.Exit(3) from e
    except NumradError as e:
        log(f"❌ {e}")
        raise typer.Exit(1) from e


def state_of(ctx: typer.Context) -> CliState:
    state: CliState = ctx.obj
    return state


@app.callback()
def main(
    ctx: typer.Context,
    tol: Annotated[Optional[float], typer.Option(help="Certificate tolerance (default 1e-10).")] = None,
    seed: Annotated[Optional[int], typer.Option(help="Root seed of the trial streams.")] = None,
    trials: Annotated[Optional[int], typer.Option(help="Trials per sweep.")] = None,
    workers: Annotated[Optional[int], typer.Option(help="Worker threads of a sweep.")] = None,
    out: Annotated[Optional[Path], typer.Option(help="Output file (a directory for `gen`).")] = None,
    fmt: Annotated[OutputFormat, typer.Option("--format", help="Report format.")] = OutputFormat.json,
):
    load_dotenv(find_dotenv(usecwd=True))
    overrides: dict[str, Any] = {
        key: value
        for key, value in {"tol": tol, "seed": seed, "trials": trials, "max_workers": workers}.items()
        if value is not None
    }
    try:
        settings = NumradSettings(**overrides)
    except ValidationError as e:
        log(f"❌ invalid settings: {e.errors()[0]['loc']}: {e.errors()[0]['msg']}")
        raise typer.Exit(2) from e
    ctx.obj = CliState(settings=settings, out=out, fmt=FORMATS[fmt])


@app.command("radius")
def radius(
    ctx: typer.Context,
    matrix_file: Annotated[Path, typer.Argument(help="Matrix document {\"n\", \"entries\"}.")],
):
    """Certified numerical radius, with ||A|| and the sectorial index when A is accretive."""
    state = state_of(ctx)
    with guard():
        a = read_matrix(matrix_file)
        certified = numerical_radius(a, tol=state.settings.tol, grid=state.settings.grid_angles)
        norm = operator_norm(a)
        margin = state.settings.margin_rtol * norm
        accretive, delta = is_accretive(a, margin)
        gamma = sectorial_index(a, margin) if accretive else None
        report = RadiusReport(
            n=a.shape[0],
            value=certified.value,
            error_bound=certified.error_bound,
            lower=certified.lower,
            upper=certified.upper,
            norm=norm,
            accretive=accretive,
            crawford=delta,
            gamma=None if gamma is None else gamma.gamma,
            sin_gamma=None if gamma is None else gamma.sin,
        )
        write_text(render([report], state.fmt), state.out)


@app.command("check")
def check(
    ctx: typer.Context,
    bound_id: Annotated[str, typer.Argument(help="Catalog id, e.g. thm-2.2.")],
    matrix_files: Annotated[List[Path], typer.Argument(help="Matrices in role order: A [B [X [Y]]] or A_1.. B_1..")],
    sign: Annotated[Optional[int], typer.Option(help="+1 or -1; both signs when omitted.")] = None,
    alpha: Annotated[Optional[float], typer.Option(help="Exponent split in (0, 1).")] = None,
    n_halvings: Annotated[Optional[int], typer.Option(help="Square roots taken, 1..6.")] = None,
    gamma: Annotated[Optional[float], typer.Option(help="Sector half-angle to use instead of the computed one.")] = None,
):
    """Evaluate one inequality; exits 0 iff it holds."""
    state = state_of(ctx)
    with guard():
        bound = get_bound(bound_id)
        matrices = roles_for_files(bound, [read_matrix(path) for path in matrix_files])
        data = InequalityInput(
            matrices=matrices, gamma=gamma, alpha=alpha, n_halvings=n_halvings, sign=1 if sign is None else sign
        )
        context = context_for(data, state.settings)
        evaluations = evaluate_both_signs(bound_id, context)
        if sign is not None and bound.signed:
            evaluations = [e for e in evaluations if e.sign == sign]
        write_text(render(evaluations, state.fmt), state.out)
        if not all(e.holds for e in evaluations):
            raise typer.Exit(1)


@app.command("falsify")
def falsify_cmd(
    ctx: typer.Context,
    bound_id: Annotated[str, typer.Argument(help="Catalog id, or `all` for the whole catalog.")],
    ensemble: Annotated[Optional[Path], typer.Option(help="Ensemble document; the matched ensemble when omitted.")] = None,
):
    """Sweep random inputs for violations; exits 1 if any evaluation violates its bound."""
    state = state_of(ctx)
    with guard():
        if bound_id == "all":
            if ensemble is not None:
                raise InvalidInputError("`all` runs the matched ensemble of every bound; drop --ensemble")
            reports = falsify_catalog(state.settings)
        else:
            spec = None if ensemble is None else read_ensemble(ensemble)
            reports = [falsify(bound_id, state.settings, ensemble=spec)]
        write_text(render(reports, state.fmt), state.out)
        if any(report.violations for report in reports):
            raise typer.Exit(1)


@app.command("report")
def report_cmd(
    ctx: typer.Context,
    bound_a: Annotated[str, typer.Argument(help="The bound claimed to be sharper.")],
    bound_b: Annotated[str, typer.Argument(help="The bound it is compared against.")],
    ensemble: Annotated[Optional[Path], typer.Option(help="Ensemble document; matched to BOUND_A when omitted.")] = None,
):
    """Fraction of trials where BOUND_A is at least as sharp as BOUND_B, overall and per condition."""
    state = state_of(ctx)
    with guard():
        spec = None if ensemble is None else read_ensemble(ensemble)
        result = sharpness(bound_a, bound_b, state.settings, ensemble=spec)
        if state.fmt == "json":
            write_text(result.model_dump_json(indent=2), state.out)
        else:
            write_text(render(result.conditions, state.fmt), state.out)


@app.command("range")
def range_cmd(
    ctx: typer.Context,
    matrix_file: Annotated[Path, typer.Argument(help="Matrix document.")],
    points: Annotated[int, typer.Option("--points", "-N", help="Support directions, at least 8.")] = DEFAULT_BOUNDARY_POINTS,
):
    """Boundary points of the numerical range as CSV: theta,p,re,im."""
    state = state_of(ctx)
    with guard():
        scan = boundary_polygon(read_matrix(matrix_file), points)
        write_text(frame_csv(boundary_frame(scan)), state.out)


@app.command("gen")
def gen_cmd(
    ctx: typer.Context,
    bound_id: Annotated[str, typer.Argument(help="Catalog id whose matched input is generated.")],
    trial: Annotated[int, typer.Option(help="Trial index of the input.")] = 0,
    ensemble: Annotated[Optional[Path], typer.Option(help="Ensemble document; the matched ensemble when omitted.")] = None,
):
    """Write the matrices of one trial input, one document per role, into --out (default: current directory)."""
    state = state_of(ctx)
    with guard():
        bound = get_bound(bound_id)
        spec = resolve_ensemble(bound, state.settings, None if ensemble is None else read_ensemble(ensemble))
        data = build_input(bound, spec, stream(state.settings.seed, trial))
        directory = state.out or Path(".")
        for role, matrix in data.matrices.items():
            path = directory / f"{role}.json"
            write_text(matrix_json(matrix), path)
            typer.echo(str(path))
        log(f"✅ wrote {len(data.matrices)} matrices for {bound_id}, trial {trial}")


@app.command("reproduce")
def reproduce_cmd(ctx: typer.Context):
    """Recompute the remark example and compare it with its closed-form values; exits 1 on a mismatch."""
    state = state_of(ctx)
    with guard():
        rows = reproduce(state.settings)
        write_text(render(rows, state.fmt), state.out)
        if not all(row.matches for row in rows):
            raise typer.Exit(1)


@app.command("catalog")
def catalog_cmd(ctx: typer.Context):
    """Registered inequalities with their roles, predicates and statements."""
    state = state_of(ctx)
    write_text(render(list_catalog(), state.fmt), state.out)


if __name__ == "__main__":
    app()
