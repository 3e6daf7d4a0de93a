"""
Flat-file I/O of the harness: matrix and ensemble documents, boundary CSV
export, and report rendering.

Every document parser reports syntax errors by line and column and schema
errors by field path, through ParseError.
"""

import json
from pathlib import Path
from typing import Any, Sequence, TypeVar

import polars as pl
import typer
from pydantic import BaseModel, ValidationError

from numrad.errors import ParseError
from numrad.fov import BoundaryScan
from numrad.generators import EnsembleSpec
from numrad.harness.protocol import Format, MatrixDocument
from numrad.utils import ComplexMatrix

Document = TypeVar("Document", bound=BaseModel)


def _field_path(location: tuple[int | str, ...]) -> str:
    path = ""
    for part in location:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path.lstrip(".") or "<root>"


def parse_document(text: str, model: type[Document], source: str = "<input>") -> Document:
    """
    Parse a JSON document into `model`.

    Raises:
        ParseError: With "line L, column C" for malformed JSON and the
            field path for schema violations.
    """
    try:
        raw: Any = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(source, f"line {e.lineno}, column {e.colno}", e.msg) from e
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParseError(source, _field_path(tuple(first["loc"])), first["msg"]) from e


def read_document(path: Path, model: type[Document]) -> Document:
    try:
        text = path.read_text()
    except OSError as e:
        raise ParseError(str(path), "file", e.strerror or str(e)) from e
    return parse_document(text, model, str(path))


def read_matrix(path: Path) -> ComplexMatrix:
    return read_document(path, MatrixDocument).to_matrix()


def read_ensemble(path: Path) -> EnsembleSpec:
    return read_document(path, EnsembleSpec)


def matrix_json(matrix: ComplexMatrix) -> str:
    return MatrixDocument.from_matrix(matrix).model_dump_json()


def write_text(text: str, out: Path | None = None) -> None:
    """Write `text` to `out`, or to stdout when no path is given."""
    if out is None:
        typer.echo(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text if text.endswith("\n") else text + "\n")


def boundary_frame(scan: BoundaryScan) -> pl.DataFrame:
    return pl.DataFrame(
        {
            "theta": scan.angles,
            "p": scan.support_values,
            "re": scan.boundary_points.real,
            "im": scan.boundary_points.imag,
        }
    )


def frame_csv(frame: pl.DataFrame) -> str:
    return frame.write_csv(line_terminator="\n")


def frame_table(frame: pl.DataFrame) -> str:
    with pl.Config(tbl_rows=-1, tbl_cols=-1, tbl_hide_dataframe_shape=True, fmt_float="full", fmt_str_lengths=120):
        return str(frame)


def render(records: Sequence[BaseModel], fmt: Format, exclude: set[str] | None = None) -> str:
    """
    Render a list of flat records.

    json gives an array (a single object when there is one record); csv and
    table go through a polars frame of the scalar fields.
    """
    if fmt == "json":
        if len(records) == 1:
            return records[0].model_dump_json(indent=2, exclude=exclude)
        return "[\n" + ",\n".join(r.model_dump_json(indent=2, exclude=exclude) for r in records) + "\n]"
    rows = [
        {k: v for k, v in r.model_dump(exclude=exclude).items() if not isinstance(v, (dict, list))} for r in records
    ]
    frame = pl.DataFrame(rows)
    return frame_csv(frame) if fmt == "csv" else frame_table(frame)
