from typing import Literal, Any
import datetime
import sys

import numpy as np
import numpy.typing as npt

from numrad.errors import InvalidInputError

ComplexMatrix = npt.NDArray[np.complex128]
RealVector = npt.NDArray[np.float64]


def iso_timestamp_now() -> str:
    now = datetime.datetime.now(tz=datetime.timezone.utc)
    iso_now = now.isoformat()
    return iso_now


def log(
    msg: str,
    *values: object,
    sep: str | None = " ",
    end: str | None = "\n",
    file: Any | None = None,
    flush: Literal[False] = False,
):
    # stdout carries command output, so diagnostics go to stderr
    print(
        f"[{iso_timestamp_now()}] " + msg,
        *values,
        sep=sep,
        end=end,
        file=sys.stderr if file is None else file,
        flush=flush,
    )


def as_matrix(data: object, name: str = "A") -> ComplexMatrix:
    """
    Coerce `data` to a square, finite complex128 matrix.

    Raises:
        InvalidInputError: If the data is not a finite square 2-d array.
    """
    try:
        matrix = np.array(data, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise InvalidInputError(f"{name}: not a numeric array ({e})") from e
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise InvalidInputError(f"{name}: expected a non-empty square matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidInputError(f"{name}: entries must be finite")
    return matrix


def frobenius_norm(matrix: npt.NDArray[Any]) -> float:
    return float(np.linalg.norm(matrix))
