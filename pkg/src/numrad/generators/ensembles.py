"""
Random matrices with exact structural guarantees.

Sectorial, accretive-dissipative and cone samples are A = R(I + iS)R with
R = P^{1/2}: then Re A = P and Im A = RSR, and the pencil P^{-1/2}(Im A)P^{-1/2}
is exactly S, so the spectrum of S fixes the sector or cone of W(A).
"""

import math

import numpy as np

from numrad.errors import InvalidInputError
from numrad.generators.protocol import EnsembleSpec
from numrad.generators.rng import Seed, as_generator, complex_gaussian, random_unitary
from numrad.linalg import operator_norm
from numrad.linalg.constants import SWEEP_SOLVER
from numrad.utils import ComplexMatrix, RealVector

DISSIPATIVE_FLOOR = 0.1  # spectrum of S in [this * tan(gamma), tan(gamma)]


def random_hermitian_with_spectrum(values: RealVector, seed: Seed = 0) -> ComplexMatrix:
    """U diag(values) U* for a random unitary U, Hermitian to the last bit."""
    rng = as_generator(seed)
    u = random_unitary(values.shape[0], rng)
    h = (u * values[None, :]) @ u.conj().T
    return 0.5 * (h + h.conj().T)


def _spread(rng: np.random.Generator, n: int, low: float, high: float) -> RealVector:
    """n values in [low, high]; for n >= 2 both endpoints are attained."""
    values = rng.uniform(low, high, size=n)
    if n >= 2:
        picks = rng.permutation(n)[:2]
        values[picks[0]], values[picks[1]] = low, high
    return values


def random_hermitian_pd(n: int, low: float, high: float, seed: Seed = 0) -> ComplexMatrix:
    """Hermitian positive definite with eigenvalues in [low, high], 0 < low <= high."""
    if not 0.0 < low <= high:
        raise InvalidInputError(f"eigenvalue range must satisfy 0 < low <= high, got ({low}, {high})")
    rng = as_generator(seed)
    return random_hermitian_with_spectrum(_spread(rng, n, low, high), rng)


def _pencil_sample(spec: EnsembleSpec, s_values: RealVector, rng: np.random.Generator) -> ComplexMatrix:
    n = s_values.shape[0]
    low, high = spec.modulus_range
    p_values = _spread(rng, n, low, high)
    u = random_unitary(n, rng)
    p = (u * p_values[None, :]) @ u.conj().T
    root = (u * np.sqrt(p_values)[None, :]) @ u.conj().T
    s = random_hermitian_with_spectrum(s_values, rng)
    k = root @ s @ root
    return 0.5 * (p + p.conj().T) + 0.5j * (k + k.conj().T)


def _require(value: float | None, name: str, kind: str) -> float:
    if value is None:
        raise InvalidInputError(f"{kind} samples need {name} (or its range)")
    return value


def gen_sectorial(spec: EnsembleSpec, seed: Seed | None = None) -> ComplexMatrix:
    """Sectorial with minimal index exactly gamma_target: ||S|| = tan(gamma_target)."""
    rng = as_generator(spec.seed if seed is None else seed)
    spec = spec.resolve(rng)
    tangent = math.tan(_require(spec.gamma_target, "gamma_target", "sectorial"))
    values = rng.uniform(-1.0, 1.0, size=spec.n)
    peak = int(np.argmax(np.abs(values)))
    values[peak] = 1.0 if values[peak] >= 0.0 else -1.0
    return _pencil_sample(spec, tangent * values, rng)


def gen_accretive_dissipative(spec: EnsembleSpec, seed: Seed | None = None) -> ComplexMatrix:
    """Re A > 0 and Im A > 0, index exactly gamma_target."""
    rng = as_generator(spec.seed if seed is None else seed)
    spec = spec.resolve(rng)
    gamma = _require(spec.gamma_target, "gamma_target", "accretive-dissipative")
    if gamma <= 0.0:
        raise InvalidInputError("accretive-dissipative samples need gamma_target > 0")
    tangent = math.tan(gamma)
    values = _spread(rng, spec.n, DISSIPATIVE_FLOOR * tangent, tangent)
    values[int(np.argmax(values))] = tangent
    return _pencil_sample(spec, values, rng)


def gen_cone(spec: EnsembleSpec, seed: Seed | None = None) -> ComplexMatrix:
    """
    W(A) inside {r e^{-i theta} : theta1 <= theta <= theta2}; the adjoint for the upper orientation.
    """
    rng = as_generator(spec.seed if seed is None else seed)
    spec = spec.resolve(rng)
    theta1 = _require(spec.theta1, "theta1", "cone")
    theta2 = _require(spec.theta2, "theta2", "cone")
    values = -_spread(rng, spec.n, math.tan(theta1), math.tan(theta2))
    a = _pencil_sample(spec, values, rng)
    return a.conj().T.copy() if spec.orientation == "upper" else a


def gen_double_commuting(spec: EnsembleSpec, seed: Seed | None = None) -> list[ComplexMatrix]:
    """family_size matrices U D_i U* sharing one unitary, diagonal arguments in [-gamma, gamma]."""
    rng = as_generator(spec.seed if seed is None else seed)
    spec = spec.resolve(rng)
    gamma = _require(spec.gamma_target, "gamma_target", "double-commuting")
    u = random_unitary(spec.n, rng)
    low, high = spec.modulus_range
    family: list[ComplexMatrix] = []
    for _ in range(spec.family_size):
        moduli = rng.uniform(low, high, size=spec.n)
        arguments = rng.uniform(-gamma, gamma, size=spec.n)
        family.append((u * (moduli * np.exp(1j * arguments))[None, :]) @ u.conj().T)
    return family


def gen_generic(spec: EnsembleSpec, seed: Seed | None = None) -> ComplexMatrix:
    """Complex Gaussian matrix rescaled so ||A|| is uniform in modulus_range."""
    rng = as_generator(spec.seed if seed is None else seed)
    spec = spec.resolve(rng)
    a = complex_gaussian(rng, (spec.n, spec.n))
    target = rng.uniform(*spec.modulus_range)
    return a * (target / operator_norm(a, solver=SWEEP_SOLVER))


def sample(spec: EnsembleSpec, seed: Seed | None = None) -> list[ComplexMatrix]:
    """
    family_size matrices of `spec.kind` from one stream; every member shares the
    resolved dimension and angles.
    """
    rng = as_generator(spec.seed if seed is None else seed)
    resolved = spec.resolve(rng)
    if resolved.kind == "double-commuting":
        return gen_double_commuting(resolved, rng)
    generate = {
        "sectorial": gen_sectorial,
        "accretive-dissipative": gen_accretive_dissipative,
        "cone": gen_cone,
        "generic": gen_generic,
    }[resolved.kind]
    return [generate(resolved, rng) for _ in range(resolved.family_size)]
