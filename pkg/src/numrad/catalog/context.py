"""
Evaluation context: every matrix quantity an inequality reads, computed once
per input and carried with an absolute error bound.
"""

from functools import cached_property
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from numrad.catalog.constants import COMMUTE_RTOL, EPS, GAMMA_ATOL, GAMMA_CUTOFF, ROUNDOFF_FACTOR
from numrad.catalog.measured import Measured, mmax
from numrad.catalog.protocol import InequalityInput, Predicate
from numrad.errors import ApplicabilityError, DomainError, NotConeConfinedError
from numrad.fov import (
    RayCone,
    cone_fit,
    crawford_number,
    is_accretive,
    is_accretive_dissipative,
    numerical_radius,
    pencil_spectrum,
    sectorial_index,
)
from numrad.fov.constants import DEFAULT_TOL
from numrad.linalg import adjoint_commutator_residual, cartesian_parts, commutator_residual, eigh_stack, operator_norm
from numrad.linalg.constants import SWEEP_SOLVER
from numrad.matfun import PowerResult, fractional_power, power_chain
from numrad.matfun.constants import INITIAL_NODES, MAX_NODES, QUADRATURE_RTOL
from numrad.utils import ComplexMatrix, RealVector, frobenius_norm


def _hermitian_norm(h: ComplexMatrix) -> float:
    values, _ = eigh_stack(h[None])
    return float(np.max(np.abs(values[0])))


class MatrixFacts:
    """
    Lazily computed quantities of one matrix.

    `matrix_error` bounds ||A~ - A||_F for matrices that are themselves
    computed (roots, powers, products); every 1-Lipschitz quantity
    inherits it on top of its own round-off floor.
    """

    def __init__(self, matrix: ComplexMatrix, tol: float = DEFAULT_TOL, matrix_error: float = 0.0) -> None:
        self.matrix = matrix
        self.tol = tol
        self.matrix_error = matrix_error
        self.frobenius = frobenius_norm(matrix)
        self.floor = ROUNDOFF_FACTOR * EPS * self.frobenius + matrix_error

    @cached_property
    def parts(self) -> tuple[ComplexMatrix, ComplexMatrix]:
        return cartesian_parts(self.matrix)

    @cached_property
    def radius(self) -> Measured:
        certified = numerical_radius(self.matrix, tol=self.tol)
        return Measured(certified.value, certified.error_bound + self.matrix_error)

    @cached_property
    def norm(self) -> Measured:
        return Measured(operator_norm(self.matrix, solver=SWEEP_SOLVER), self.floor)

    @cached_property
    def re_norm(self) -> Measured:
        return Measured(_hermitian_norm(self.parts[0]), self.floor)

    @cached_property
    def im_norm(self) -> Measured:
        return Measured(_hermitian_norm(self.parts[1]), self.floor)

    @cached_property
    def sym_norm(self) -> Measured:
        """||AA* + A*A||, which is 2 ||Re^2 A + Im^2 A||."""
        a = self.matrix
        a_star = a.conj().T
        value = _hermitian_norm(a @ a_star + a_star @ a)
        e = self.matrix_error
        error = ROUNDOFF_FACTOR * EPS * self.frobenius**2 + 2.0 * (2.0 * self.frobenius * e + e * e)
        return Measured(value, error)

    @cached_property
    def crawford(self) -> float:
        return crawford_number(self.matrix)

    @cached_property
    def accretive(self) -> bool:
        return is_accretive(self.matrix)[0]

    @cached_property
    def accretive_dissipative(self) -> bool:
        return is_accretive_dissipative(self.matrix)

    @cached_property
    def pencil(self) -> RealVector:
        if not self.accretive:
            raise DomainError(f"matrix is not accretive: lambda_min(Re A) = {self.crawford:.6g}")
        re, im = self.parts
        return pencil_spectrum(re, im)

    @cached_property
    def pencil_error(self) -> float:
        """Error of arctan of every pencil eigenvalue: the pencil is sensitive through kappa(Re A) and 1/delta."""
        mu = self.pencil
        rho = float(np.max(np.abs(mu)))
        values, _ = eigh_stack(self.parts[0][None])
        low, high = float(values[0, 0]), float(values[0, -1])
        kappa = high / low
        error_rho = ROUNDOFF_FACTOR * EPS * kappa * max(rho, 1.0) + (1.0 + rho) * self.matrix_error / low
        return error_rho / (1.0 + rho * rho)

    @cached_property
    def sector(self) -> Measured:
        gamma = sectorial_index(self.matrix).gamma
        error = self.pencil_error
        if gamma == 0.0:
            # gamma is reported as exactly 0 below the zero-imaginary cutoff
            error += frobenius_norm(self.parts[1]) / self.crawford
        return Measured(gamma, error)

    @cached_property
    def cone(self) -> RayCone:
        return cone_fit(self.matrix)


class EvalContext:
    """
    Shared state of one bound evaluation: the input, the cached facts of every
    role and derived matrix, and the applicability checks.
    """

    def __init__(
        self,
        data: InequalityInput,
        tol: float = DEFAULT_TOL,
        commute_rtol: float = COMMUTE_RTOL,
        gamma_cutoff: float = GAMMA_CUTOFF,
        quadrature_rtol: float = QUADRATURE_RTOL,
        initial_nodes: int = INITIAL_NODES,
        max_nodes: int = MAX_NODES,
    ) -> None:
        self.data = data
        self.tol = tol
        self.commute_rtol = commute_rtol
        self.gamma_cutoff = gamma_cutoff
        self.quadrature_rtol = quadrature_rtol
        self.initial_nodes = initial_nodes
        self.max_nodes = max_nodes
        self.gamma_used: float | None = None
        self._facts: dict[str, MatrixFacts] = {}

    @property
    def sign(self) -> int:
        return self.data.sign

    def with_sign(self, sign: int) -> "EvalContext":
        """A context for the other sign of a +- bound that shares the cached facts."""
        other = EvalContext(
            self.data.with_sign(sign),
            tol=self.tol,
            commute_rtol=self.commute_rtol,
            gamma_cutoff=self.gamma_cutoff,
            quadrature_rtol=self.quadrature_rtol,
            initial_nodes=self.initial_nodes,
            max_nodes=self.max_nodes,
        )
        other._facts = self._facts
        return other

    def facts(self, role: str) -> MatrixFacts:
        if role not in self._facts:
            self._facts[role] = MatrixFacts(self.data.role(role), self.tol)
        return self._facts[role]

    def derived(self, key: str, build: Callable[[], tuple[ComplexMatrix, float]]) -> MatrixFacts:
        """Facts of a matrix computed from the roles, cached under `key`; `build` returns (matrix, error)."""
        if key not in self._facts:
            matrix, error = build()
            self._facts[key] = MatrixFacts(matrix, self.tol, error)
        return self._facts[key]

    def identity(self) -> ComplexMatrix:
        return np.eye(self.data.dimension, dtype=np.complex128)

    def role_or_identity(self, role: str) -> MatrixFacts:
        if self.data.has(role):
            return self.facts(role)
        return self.derived("I", lambda: (self.identity(), 0.0))

    def combine(self, key: str, terms: Sequence[tuple[complex, Sequence[MatrixFacts]]]) -> MatrixFacts:
        """
        Facts of sum_k c_k F_k1 F_k2 ... for products of cached matrices.

        The error of each product is sum_j ||F_1|| ... e_j ... ||F_m|| plus a
        round-off floor, to first order.
        """

        def build() -> tuple[ComplexMatrix, float]:
            total = np.zeros((self.data.dimension,) * 2, dtype=np.complex128)
            error = 0.0
            for coefficient, factors in terms:
                product = factors[0].matrix
                for factor in factors[1:]:
                    product = product @ factor.matrix
                total += coefficient * product
                norms = [f.frobenius for f in factors]
                scale = float(np.prod(norms))
                propagated = sum(
                    f.matrix_error * float(np.prod(norms[:j] + norms[j + 1 :])) for j, f in enumerate(factors)
                )
                error += abs(coefficient) * (ROUNDOFF_FACTOR * EPS * scale + propagated)
            return total, error

        return self.derived(key, build)

    def sym_sum(self, members: list[MatrixFacts]) -> Measured:
        """||sum_i (F_i* F_i + F_i F_i*)||."""
        total = np.zeros((self.data.dimension,) * 2, dtype=np.complex128)
        error = 0.0
        for f in members:
            star = f.matrix.conj().T
            total += star @ f.matrix + f.matrix @ star
            e = f.matrix_error
            error += ROUNDOFF_FACTOR * EPS * f.frobenius**2 + 2.0 * (2.0 * f.frobenius * e + e * e)
        return Measured(_hermitian_norm(total), error)

    def root(self, role: str, n_halvings: int) -> MatrixFacts:
        """A^{1/2^n} from the square-root chain, its error taken from the gap to the contour route."""

        def build() -> tuple[ComplexMatrix, float]:
            a = self.facts(role).matrix
            chain = power_chain(a, n_halvings)
            reference = self._power(a, 2.0**-n_halvings)
            return chain, frobenius_norm(chain - reference.matrix) + reference.error

        return self.derived(f"{role}^(1/2^{n_halvings})", build)

    def power(self, role: str, t: float) -> MatrixFacts:
        def build() -> tuple[ComplexMatrix, float]:
            a = self.facts(role).matrix
            result = self._power(a, t)
            return result.matrix, result.error

        return self.derived(f"{role}^{t!r}", build)

    def _power(self, a: ComplexMatrix, t: float) -> PowerResult:
        return fractional_power(
            a, t, rtol=self.quadrature_rtol, initial_nodes=self.initial_nodes, max_nodes=self.max_nodes
        )

    def sector(self, bound_id: str, role: str) -> Measured:
        try:
            return self.facts(role).sector
        except DomainError as e:
            raise ApplicabilityError(bound_id, "sectorial", f"{role}: {e}") from e

    def gamma(self, bound_id: str, roles: list[str]) -> Measured:
        """
        The common sector half-angle of `roles`: the supplied gamma when it is
        valid for every role, otherwise the largest computed sectorial index.
        """
        computed = mmax(*(self.sector(bound_id, role) for role in roles))
        supplied = self.data.gamma
        if supplied is None:
            result = computed
        elif supplied < computed.lower - GAMMA_ATOL:
            raise ApplicabilityError(
                bound_id,
                "sectorial",
                f"supplied gamma {supplied:.6g} is below the sectorial index {computed.value:.6g}",
            )
        else:
            result = Measured.exact(supplied)
        self.gamma_used = result.value
        return result

    def cone(self, bound_id: str, roles: list[str]) -> tuple[RayCone, float]:
        """
        A cone shared by `roles` and the error of its angles.

        Fitted cones are merged into theta1 = min, theta2 = max; a supplied
        cone must contain the merged one.
        """
        fits: list[tuple[RayCone, float]] = []
        for role in roles:
            facts = self.facts(role)
            try:
                fits.append((facts.cone, facts.pencil_error))
            except (DomainError, NotConeConfinedError) as e:
                raise ApplicabilityError(bound_id, "cone", f"{role}: {e}") from e
        orientations = {cone.orientation for cone, _ in fits}
        if len(orientations) > 1:
            raise ApplicabilityError(bound_id, "cone", "numerical ranges open to opposite sides of the real axis")
        theta1 = min(cone.theta1 for cone, _ in fits)
        theta2 = max(cone.theta2 for cone, _ in fits)
        error = max(e for _, e in fits)
        shared = RayCone(theta1=theta1, theta2=theta2, orientation=orientations.pop())
        supplied = self.data.cone
        if supplied is None:
            return shared, error
        slack = error + GAMMA_ATOL
        if (
            supplied.orientation != shared.orientation
            or supplied.theta1 > shared.theta1 + slack
            or supplied.theta2 < shared.theta2 - slack
        ):
            raise ApplicabilityError(
                bound_id,
                "cone",
                f"supplied cone [{supplied.theta1:.6g}, {supplied.theta2:.6g}] ({supplied.orientation}) "
                f"does not contain [{shared.theta1:.6g}, {shared.theta2:.6g}] ({shared.orientation})",
            )
        return supplied, 0.0

    def require(self, bound_id: str, predicate: Predicate, roles: list[str]) -> None:
        """
        Raises:
            ApplicabilityError: Naming `predicate` when it fails for any of `roles`.
        """
        if predicate == "none":
            return
        if predicate in ("accretive", "sectorial", "sectorial_nonzero"):
            for role in roles:
                facts = self.facts(role)
                if not facts.accretive:
                    raise ApplicabilityError(bound_id, predicate, f"{role}: lambda_min(Re) = {facts.crawford:.3e}")
            if predicate == "sectorial_nonzero":
                gamma = self.gamma(bound_id, roles)
                if gamma.value < self.gamma_cutoff:
                    raise ApplicabilityError(
                        bound_id, predicate, f"gamma = {gamma.value:.3e} is below {self.gamma_cutoff:g}"
                    )
        elif predicate == "accretive_dissipative":
            for role in roles:
                if not self.facts(role).accretive_dissipative:
                    raise ApplicabilityError(bound_id, predicate, f"{role} is not accretive-dissipative")
        elif predicate == "double_commuting":
            self._require_double_commuting(bound_id, roles)
        else:
            self.cone(bound_id, roles)

    def _require_double_commuting(self, bound_id: str, roles: list[str]) -> None:
        for left, right in combinations(roles, 2):
            x, y = self.facts(left), self.facts(right)
            scale = self.commute_rtol * max(x.norm.value * y.norm.value, np.finfo(np.float64).tiny)
            residual = max(commutator_residual(x.matrix, y.matrix), adjoint_commutator_residual(x.matrix, y.matrix))
            if residual > scale:
                raise ApplicabilityError(
                    bound_id, "double_commuting", f"{left}, {right}: residual {residual:.3e} exceeds {scale:.3e}"
                )
