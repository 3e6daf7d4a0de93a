"""
Matched inputs: for every registered bound, an ensemble whose samples satisfy
the bound's predicates by construction, and the per-trial input built from it.

Roles the predicates are checked on get structured samples; every other role
(B, X, Y of most commutator bounds) is a generic matrix of the same size.
"""

import numpy as np

from numrad.base import BaseBound, CommutatorBound, FamilyBound, PairBound
from numrad.catalog import EvalContext, InequalityInput
from numrad.catalog.protocol import Predicate
from numrad.errors import InvalidInputError
from numrad.generators import EnsembleKind, EnsembleSpec, gen_generic, sample
from numrad.harness._config import NumradSettings
from numrad.harness.constants import ALPHA_RANGE, FAMILY_SIZE, MAX_TRIAL_HALVINGS
from numrad.utils import ComplexMatrix

_STRUCTURED: tuple[EnsembleKind, ...] = ("sectorial", "accretive-dissipative", "double-commuting", "cone")

ALLOWED_KINDS: dict[Predicate, tuple[EnsembleKind, ...]] = {
    "none": _STRUCTURED + ("generic",),
    "accretive": _STRUCTURED,
    "sectorial": _STRUCTURED,
    "sectorial_nonzero": _STRUCTURED,
    "accretive_dissipative": ("accretive-dissipative",),
    "double_commuting": ("double-commuting",),
    "cone": ("cone",),
}


def matched_kind(bound: BaseBound) -> EnsembleKind:
    predicates = set(bound.predicates)
    if "cone" in predicates:
        return "cone"
    if "double_commuting" in predicates:
        return "double-commuting"
    if "accretive_dissipative" in predicates:
        return "accretive-dissipative"
    if predicates & {"accretive", "sectorial", "sectorial_nonzero"}:
        return "sectorial"
    return "generic"


def matched_ensemble(bound: BaseBound, settings: NumradSettings) -> EnsembleSpec:
    kind = matched_kind(bound)
    return EnsembleSpec(
        kind=kind,
        family_size=FAMILY_SIZE if isinstance(bound, FamilyBound) and not isinstance(bound, PairBound) else 1,
        seed=settings.seed,
        n_range=settings.n_range,
        gamma_range=settings.gamma_range if kind in ("sectorial", "accretive-dissipative", "double-commuting") else None,
        cone_range=settings.gamma_range if kind == "cone" else None,
    )


def check_ensemble(bound: BaseBound, spec: EnsembleSpec) -> None:
    """
    Raises:
        InvalidInputError: If samples of `spec` do not satisfy a predicate of `bound` by construction.
    """
    for predicate in bound.predicates:
        if spec.kind not in ALLOWED_KINDS[predicate]:
            raise InvalidInputError(
                f"{bound.bound_id}: {spec.kind} samples do not guarantee the '{predicate}' predicate"
            )
    fixed = {
        "sectorial": spec.gamma_target is not None or spec.gamma_range is not None,
        "accretive-dissipative": spec.gamma_target is not None or spec.gamma_range is not None,
        "double-commuting": spec.gamma_target is not None or spec.gamma_range is not None,
        "cone": (spec.theta1 is not None and spec.theta2 is not None) or spec.cone_range is not None,
        "generic": True,
    }[spec.kind]
    if not fixed:
        raise InvalidInputError(f"{spec.kind} ensembles need their angles or an angle range")


def structured_roles(bound: BaseBound, family_size: int) -> list[str]:
    if isinstance(bound, PairBound):
        return ["A", "B"]
    if isinstance(bound, FamilyBound):
        return [f"{prefix}_{i}" for prefix in bound.families for i in range(1, family_size + 1)]
    if isinstance(bound, CommutatorBound):
        return list(bound.subjects)
    return ["A"]


def other_roles(bound: BaseBound) -> list[str]:
    if isinstance(bound, CommutatorBound):
        return [role for role in bound.roles if role not in bound.subjects]
    return []


def build_input(bound: BaseBound, spec: EnsembleSpec, rng: np.random.Generator) -> InequalityInput:
    """One trial input for `bound`; every random draw comes from `rng`, in a fixed order."""
    resolved = spec.resolve(rng)
    structured = structured_roles(bound, resolved.family_size)
    members = sample(resolved.model_copy(update={"family_size": len(structured)}), rng)
    matrices: dict[str, ComplexMatrix] = dict(zip(structured, members))
    generic = resolved.model_copy(update={"kind": "generic"})
    for role in other_roles(bound):
        matrices[role] = gen_generic(generic, rng)
    alpha = float(rng.uniform(*ALPHA_RANGE)) if "alpha" in bound.parameters else None
    n_halvings = int(rng.integers(1, MAX_TRIAL_HALVINGS + 1)) if "n_halvings" in bound.parameters else None
    return InequalityInput(matrices=matrices, alpha=alpha, n_halvings=n_halvings)


def context_for(data: InequalityInput, settings: NumradSettings) -> EvalContext:
    return EvalContext(
        data,
        tol=settings.tol,
        commute_rtol=settings.commute_rtol,
        gamma_cutoff=settings.gamma_cutoff,
        quadrature_rtol=settings.quadrature_rtol,
        initial_nodes=settings.quadrature_initial_nodes,
        max_nodes=settings.quadrature_max_nodes,
    )


def roles_for_files(bound: BaseBound, matrices: list[ComplexMatrix]) -> dict[str, ComplexMatrix]:
    """
    Assign matrices given in order to the roles of `bound`: A [B [X [Y]]]
    for single, pair and commutator bounds, A_1..A_k then B_1..B_k for families.

    Raises:
        InvalidInputError: If the count does not fit the bound.
    """
    if isinstance(bound, FamilyBound) and not isinstance(bound, PairBound):
        groups = len(bound.families)
        if not matrices or len(matrices) % groups:
            raise InvalidInputError(f"{bound.bound_id} takes a multiple of {groups} matrices, got {len(matrices)}")
        k = len(matrices) // groups
        return {
            f"{prefix}_{i + 1}": matrices[j * k + i] for j, prefix in enumerate(bound.families) for i in range(k)
        }
    required = 2 if isinstance(bound, (PairBound, CommutatorBound)) else 1
    if not required <= len(matrices) <= len(bound.roles):
        raise InvalidInputError(
            f"{bound.bound_id} takes roles {', '.join(bound.roles)}; got {len(matrices)} matrices"
        )
    return dict(zip(bound.roles, matrices))
