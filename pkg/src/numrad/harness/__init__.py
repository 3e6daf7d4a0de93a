from numrad.harness._config import NumradSettings
from numrad.harness.harness import falsify, falsify_catalog, sharpness
from numrad.harness.protocol import GoldenRow, MatrixDocument, RunReport, SharpnessReport
from numrad.harness.reproduce import reproduce

__all__ = [
    "GoldenRow",
    "MatrixDocument",
    "NumradSettings",
    "RunReport",
    "SharpnessReport",
    "falsify",
    "falsify_catalog",
    "reproduce",
    "sharpness",
]
