import json
from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from numrad.generators import stream
from numrad.harness import NumradSettings
from numrad.harness.protocol import MatrixDocument
from numrad.utils import ComplexMatrix

MatrixWriter = Callable[[str, object], Path]


@pytest.fixture
def remark() -> ComplexMatrix:
    """diag(3 + 2i, 1): w^2 = 13, sin(gamma) = 2/sqrt(13)."""
    return np.diag([3.0 + 2.0j, 1.0 + 0.0j])


@pytest.fixture
def rng() -> np.random.Generator:
    return stream(20240601)


@pytest.fixture
def settings() -> NumradSettings:
    return NumradSettings(trials=40, max_workers=4, seed=7)


@pytest.fixture
def write_matrix(tmp_path: Path) -> MatrixWriter:
    def write(name: str, data: object) -> Path:
        path = tmp_path / f"{name}.json"
        document = MatrixDocument.from_matrix(np.asarray(data, dtype=np.complex128))
        path.write_text(document.model_dump_json())
        return path

    return write


def read_json(path: Path) -> object:
    return json.loads(path.read_text())


def random_matrix(rng: np.random.Generator, n: int) -> ComplexMatrix:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_hermitian(rng: np.random.Generator, n: int) -> ComplexMatrix:
    g = random_matrix(rng, n)
    return 0.5 * (g + g.conj().T)
