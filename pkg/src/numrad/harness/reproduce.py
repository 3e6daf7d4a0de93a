"""
The golden table of the remark example A = diag(3 + 2i, 1), recomputed
through the catalog and compared against closed-form values.
"""

import math

import numpy as np

from numrad.catalog import InequalityInput
from numrad.catalog.registry import evaluate
from numrad.harness._config import NumradSettings
from numrad.harness.constants import GOLDEN_ATOL, REMARK_ENTRIES, REMARK_GOLDENS
from numrad.harness.protocol import GoldenRow
from numrad.harness.trials import context_for
from numrad.utils import ComplexMatrix, log


def remark_matrix() -> ComplexMatrix:
    return np.array(REMARK_ENTRIES, dtype=np.complex128)


def remark_values(settings: NumradSettings) -> dict[str, float]:
    a = remark_matrix()
    ctx = context_for(InequalityInput(matrices={"A": a}), settings)
    facts = ctx.facts("A")
    cartesian = evaluate("thm-2.2", ctx)
    re2, im2 = facts.re_norm.value**2, facts.im_norm.value**2
    commutator = context_for(InequalityInput(matrices={"A": a, "B": np.eye(2, dtype=np.complex128)}), settings)
    return {
        "w^2(A)": cartesian.lhs,
        "thm-2.2 rhs": cartesian.rhs,
        "base-quarter rhs": evaluate("base-quarter", ctx).rhs,
        "base-refined rhs": evaluate("base-refined", ctx).rhs,
        "||AA* + A*A||": facts.sym_norm.value,
        "sin(gamma)": math.sin(facts.sector.value),
        "threshold": math.sqrt(1.0 - (re2 - im2) / (facts.sym_norm.value / 2)),
        "cor-2.5 rhs (B = I)": evaluate("cor-2.5", commutator).rhs,
    }


def reproduce(settings: NumradSettings | None = None) -> list[GoldenRow]:
    """Every golden row, in table order; a row matches within 1e-9."""
    values = remark_values(settings or NumradSettings())
    rows: list[GoldenRow] = []
    for quantity, expected in REMARK_GOLDENS.items():
        value = values[quantity]
        deviation = abs(value - expected)
        rows.append(
            GoldenRow(
                quantity=quantity,
                value=value,
                expected=expected,
                deviation=deviation,
                matches=deviation <= GOLDEN_ATOL,
            )
        )
        if deviation > GOLDEN_ATOL:
            log(f"❌ {quantity}: {value!r} differs from {expected!r} by {deviation:.3e}")
    return rows
