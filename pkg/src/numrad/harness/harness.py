"""
Falsification sweeps and sharpness comparisons over matched random inputs.

Functions:
    run_trial: Evaluate one bound on the input of one trial.
    falsify: Sweep one bound over `trials` inputs and aggregate a RunReport.
    falsify_catalog: falsify for every registered bound.
    sharpness: Compare the bound expressions of two bounds trial by trial.
    condition_holds: The sharpness conditions on the subject matrix A.
"""

import concurrent.futures
import math
import time
from dataclasses import dataclass
from functools import partial
from typing import Callable

import numpy as np

from numrad.base import BaseBound
from numrad.catalog import BoundEvaluation, EvalContext, InequalityInput, MatrixFacts
from numrad.catalog.registry import REGISTRY, evaluate_both_signs, get_bound
from numrad.errors import ApplicabilityError, InvalidInputError
from numrad.generators import EnsembleSpec, stream
from numrad.harness._config import NumradSettings
from numrad.harness.constants import HISTOGRAM_EDGES
from numrad.harness.protocol import (
    Condition,
    ConditionFraction,
    HistogramBucket,
    MatrixDocument,
    RunReport,
    SharpnessReport,
    Witness,
)
from numrad.harness.trials import build_input, check_ensemble, context_for, matched_ensemble
from numrad.utils import log


@dataclass(frozen=True)
class TrialOutcome:
    index: int
    data: InequalityInput
    evaluations: list[BoundEvaluation]
    skipped: bool = False


def resolve_ensemble(bound: BaseBound, settings: NumradSettings, ensemble: EnsembleSpec | None) -> EnsembleSpec:
    spec = matched_ensemble(bound, settings) if ensemble is None else ensemble
    check_ensemble(bound, spec)
    return spec


def run_trial(
    bound: BaseBound, spec: EnsembleSpec, settings: NumradSettings, seed: int, index: int
) -> TrialOutcome:
    data = build_input(bound, spec, stream(seed, index))
    try:
        evaluations = evaluate_both_signs(bound.bound_id, context_for(data, settings))
    except ApplicabilityError as e:
        log(f"trial {index} skipped: {e}")
        return TrialOutcome(index, data, [], skipped=True)
    return TrialOutcome(index, data, evaluations)


def slack_histogram(relative_slacks: list[float]) -> list[HistogramBucket]:
    edges = np.array(HISTOGRAM_EDGES)
    counts = np.bincount(np.searchsorted(edges, relative_slacks, side="right"), minlength=edges.size + 1)
    bounds = [-math.inf, *HISTOGRAM_EDGES, math.inf]
    return [
        HistogramBucket(low=bounds[i], high=bounds[i + 1], count=int(counts[i])) for i in range(edges.size + 1)
    ]


def witness(outcome: TrialOutcome, evaluation: BoundEvaluation) -> Witness:
    return Witness(
        trial=outcome.index,
        sign=evaluation.sign,
        gamma=evaluation.gamma,
        alpha=outcome.data.alpha,
        n_halvings=outcome.data.n_halvings,
        slack=evaluation.slack,
        matrices={role: MatrixDocument.from_matrix(m) for role, m in outcome.data.matrices.items()},
    )


def falsify(
    bound_id: str,
    settings: NumradSettings,
    trials: int | None = None,
    seed: int | None = None,
    ensemble: EnsembleSpec | None = None,
) -> RunReport:
    """
    Evaluate `bound_id` on `trials` matched inputs and count violations.

    Trial i draws from stream(seed, i), so the report does not depend on
    the worker count; outcomes are aggregated in trial order.

    Raises:
        InvalidInputError: For an unknown id or an ensemble that does not
            guarantee the bound's predicates.
    """
    bound = get_bound(bound_id)
    trials = settings.trials if trials is None else trials
    seed = settings.seed if seed is None else seed
    if trials < 0:
        raise InvalidInputError(f"trials must be non-negative, got {trials}")
    spec = resolve_ensemble(bound, settings, ensemble)

    start_time = time.perf_counter()
    run = partial(run_trial, bound, spec, settings, seed)
    with concurrent.futures.ThreadPoolExecutor(max_workers=settings.max_workers) as executor:
        outcomes = [*executor.map(run, range(trials))]

    report = RunReport(bound_id=bound_id, seed=seed, trials=trials)
    relative: list[float] = []
    best: tuple[TrialOutcome, BoundEvaluation] | None = None
    for outcome in outcomes:
        if outcome.skipped:
            report.skipped += 1
            continue
        for evaluation in outcome.evaluations:
            report.evaluations += 1
            relative.append(evaluation.relative_slack)
            if not evaluation.holds:
                report.violations += 1
                log(f"❌ {bound_id}: trial {outcome.index} violates by {-evaluation.slack:.3e}")
            if best is None or evaluation.slack < best[1].slack:
                best = (outcome, evaluation)
    if best is not None:
        report.min_slack = best[1].slack
        report.min_slack_witness = witness(*best)
        report.relative_min_slack = min(relative)
    report.slack_histogram = slack_histogram(relative)
    report.wall_time = time.perf_counter() - start_time

    marker = "✅" if report.violations == 0 else "❌"
    log(
        f"{marker} {bound_id}: {report.evaluations} evaluations, {report.violations} violations, "
        f"{report.skipped} skipped, min slack {report.min_slack:.3e}"
    )
    return report


def falsify_catalog(settings: NumradSettings, trials: int | None = None, seed: int | None = None) -> list[RunReport]:
    return [falsify(bound_id, settings, trials, seed) for bound_id in REGISTRY]


def _gamma_of(a: MatrixFacts, evaluation: BoundEvaluation) -> float | None:
    if evaluation.gamma is not None:
        return evaluation.gamma
    return a.sector.value if a.accretive else None


def condition_holds(condition: Condition, a: MatrixFacts, gamma: float | None) -> bool | None:
    """Whether A meets `condition`; None when the condition needs a sector A does not have."""
    re2, im2 = a.re_norm.value**2, a.im_norm.value**2
    if condition == "all":
        return True
    if condition == "im-dominant":
        return im2 >= re2
    if condition == "re-dominant":
        return re2 > im2
    if gamma is None:
        return None
    if condition == "cartesian-threshold":
        # ||Re^2 A + Im^2 A|| is half of ||AA* + A*A||
        ratio = (re2 - im2) / (a.sym_norm.value / 2)
        return math.sin(gamma) < math.sqrt(max(1.0 - ratio, 0.0))
    return math.cos(gamma) ** 2 > (re2 - im2) / (2.0 * a.radius.value**2)


CONDITIONS: tuple[Condition, ...] = ("all", "im-dominant", "re-dominant", "cartesian-threshold", "commutator-threshold")


def _dominates(side: str, first: BoundEvaluation, second: BoundEvaluation) -> bool:
    margin = first.certified_error + second.certified_error
    if side == "lower":
        return first.rhs >= second.rhs - margin
    return first.rhs <= second.rhs + margin


def _compare_trial(
    bound_a: BaseBound,
    bound_b: BaseBound,
    spec: EnsembleSpec,
    settings: NumradSettings,
    seed: int,
    index: int,
) -> tuple[list[tuple[bool, dict[Condition, bool | None]]], bool]:
    data = build_input(bound_a, spec, stream(seed, index))
    ctx: EvalContext = context_for(data, settings)
    try:
        first = evaluate_both_signs(bound_a.bound_id, ctx)
        second = evaluate_both_signs(bound_b.bound_id, ctx)
    except ApplicabilityError as e:
        log(f"trial {index} skipped: {e}")
        return [], True
    a = ctx.facts("A") if data.has("A") else ctx.facts(data.family("A")[0])
    rows: list[tuple[bool, dict[Condition, bool | None]]] = []
    for x, y in zip(first, second * len(first) if len(second) == 1 else second):
        gamma = _gamma_of(a, x)
        rows.append((_dominates(bound_a.side, x, y), {c: condition_holds(c, a, gamma) for c in CONDITIONS}))
    return rows, False


def sharpness(
    bound_a: str,
    bound_b: str,
    settings: NumradSettings,
    trials: int | None = None,
    seed: int | None = None,
    ensemble: EnsembleSpec | None = None,
) -> SharpnessReport:
    """
    Compare the bound expressions of `bound_a` and `bound_b` on shared inputs
    drawn for `bound_a`, overall and under every sharpness condition.

    Raises:
        InvalidInputError: If the bounds differ in target or side.
    """
    first, second = get_bound(bound_a), get_bound(bound_b)
    if first.target != second.target or first.side != second.side:
        raise InvalidInputError(
            f"cannot compare {bound_a} ({first.side} bound on {first.target}) "
            f"with {bound_b} ({second.side} bound on {second.target})"
        )
    trials = settings.trials if trials is None else trials
    seed = settings.seed if seed is None else seed
    spec = resolve_ensemble(first, settings, ensemble)
    check_ensemble(second, spec)

    compare: Callable[[int], tuple[list[tuple[bool, dict[Condition, bool | None]]], bool]] = partial(
        _compare_trial, first, second, spec, settings, seed
    )
    with concurrent.futures.ThreadPoolExecutor(max_workers=settings.max_workers) as executor:
        outcomes = [*executor.map(compare, range(trials))]

    samples = {c: 0 for c in CONDITIONS}
    dominant = {c: 0 for c in CONDITIONS}
    for rows, _ in outcomes:
        for wins, met in rows:
            for c in CONDITIONS:
                if met[c]:
                    samples[c] += 1
                    dominant[c] += int(wins)
    fractions = [
        ConditionFraction(
            condition=c,
            samples=samples[c],
            dominant=dominant[c],
            fraction=dominant[c] / samples[c] if samples[c] else None,
        )
        for c in CONDITIONS
    ]
    report = SharpnessReport(
        bound_a=bound_a,
        bound_b=bound_b,
        target=first.target,
        side=first.side,
        seed=seed,
        trials=trials,
        skipped=sum(int(skipped) for _, skipped in outcomes),
        conditions=fractions,
    )
    log(f"{bound_a} vs {bound_b}: fraction {report.fraction()} over {samples['all']} comparisons")
    return report
