import numpy as np
import pytest
from pydantic import ValidationError

from numrad.errors import InvalidInputError
from numrad.fov import cone_fit, is_accretive, is_accretive_dissipative, sectorial_index
from numrad.generators import (
    EnsembleSpec,
    gen_accretive_dissipative,
    gen_cone,
    gen_double_commuting,
    gen_generic,
    gen_sectorial,
    random_hermitian_pd,
    random_unitary,
    sample,
    stream,
)
from numrad.linalg import adjoint_commutator_residual, commutator_residual, operator_norm


@pytest.mark.parametrize("gamma", [0.05, 0.6, 1.4])
def test_sectorial_samples_hit_the_target_index(gamma: float) -> None:
    spec = EnsembleSpec(kind="sectorial", n=5, gamma_target=gamma)
    for index in range(6):
        a = gen_sectorial(spec, stream(1, index))
        assert sectorial_index(a).gamma == pytest.approx(gamma, abs=1e-8)


def test_zero_gamma_gives_hermitian_positive_definite() -> None:
    a = gen_sectorial(EnsembleSpec(kind="sectorial", n=3, gamma_target=0.0))
    np.testing.assert_allclose(a, a.conj().T, atol=1e-14)
    assert is_accretive(a)[0]


def test_accretive_dissipative_samples() -> None:
    spec = EnsembleSpec(kind="accretive-dissipative", n=4, gamma_target=0.9)
    for index in range(6):
        a = gen_accretive_dissipative(spec, stream(2, index))
        assert is_accretive_dissipative(a)
        assert sectorial_index(a).gamma == pytest.approx(0.9, abs=1e-8)


def test_double_commuting_families() -> None:
    spec = EnsembleSpec(kind="double-commuting", n=4, gamma_target=0.7, family_size=3)
    family = gen_double_commuting(spec, stream(4))
    assert len(family) == 3
    for a in family:
        assert sectorial_index(a).gamma <= 0.7 + 1e-10
        for b in family:
            assert commutator_residual(a, b) <= 1e-12
            assert adjoint_commutator_residual(a, b) <= 1e-12


def test_cone_samples_stay_in_their_cone() -> None:
    spec = EnsembleSpec(kind="cone", n=5, theta1=0.2, theta2=0.9)
    for index in range(6):
        cone = cone_fit(gen_cone(spec, stream(6, index)))
        assert cone.theta1 == pytest.approx(0.2, abs=1e-8)
        assert cone.theta2 == pytest.approx(0.9, abs=1e-8)


def test_generic_norm_lies_in_the_modulus_range() -> None:
    spec = EnsembleSpec(kind="generic", n=6, modulus_range=(1.0, 3.0))
    for index in range(5):
        assert 1.0 - 1e-10 <= operator_norm(gen_generic(spec, stream(9, index))) <= 3.0 + 1e-10


def test_random_unitary_is_unitary_and_reproducible() -> None:
    u = random_unitary(6, 11)
    np.testing.assert_allclose(u.conj().T @ u, np.eye(6), atol=1e-13)
    np.testing.assert_array_equal(u, random_unitary(6, 11))
    assert not np.array_equal(u, random_unitary(6, 12))


def test_hermitian_pd_spectrum() -> None:
    values = np.linalg.eigvalsh(random_hermitian_pd(5, 0.5, 2.0, seed=3))
    assert values[0] == pytest.approx(0.5) and values[-1] == pytest.approx(2.0)
    with pytest.raises(InvalidInputError):
        random_hermitian_pd(3, 0.0, 1.0)


def test_streams_are_independent_of_order() -> None:
    first = [stream(5, index).standard_normal() for index in range(4)]
    second = [stream(5, index).standard_normal() for index in reversed(range(4))]
    assert first == second[::-1]


def test_sample_resolves_ranges_once_per_draw() -> None:
    spec = EnsembleSpec(kind="sectorial", family_size=3, n_range=(2, 7), gamma_range=(0.1, 1.2))
    members = sample(spec, stream(13))
    assert len(members) == 3
    assert len({m.shape for m in members}) == 1
    gammas = [sectorial_index(m).gamma for m in members]
    assert max(gammas) - min(gammas) <= 1e-8
    assert 0.1 - 1e-8 <= gammas[0] <= 1.2 + 1e-8


def test_sample_is_deterministic() -> None:
    spec = EnsembleSpec(kind="cone", cone_range=(0.1, 1.0), n_range=(2, 5))
    for left, right in zip(sample(spec, stream(21, 3)), sample(spec, stream(21, 3))):
        np.testing.assert_array_equal(left, right)


def test_resolve_fixes_every_range() -> None:
    resolved = EnsembleSpec(kind="cone", n_range=(3, 3), cone_range=(0.2, 0.4)).resolve(stream(0))
    assert resolved.n == 3
    assert resolved.n_range is None and resolved.cone_range is None
    assert resolved.theta1 is not None and resolved.theta2 is not None
    assert 0.2 <= resolved.theta1 <= resolved.theta2 <= 0.4


@pytest.mark.parametrize(
    "fields",
    [
        {"modulus_range": (0.0, 1.0)},
        {"modulus_range": (2.0, 1.0)},
        {"n_range": (0, 3)},
        {"gamma_range": (0.1, 2.0)},
        {"theta1": 0.8, "theta2": 0.2},
        {"kind": "accretive-dissipative", "gamma_target": 0.0},
        {"n": 0},
        {"colour": "red"},
    ],
)
def test_ensemble_spec_validation(fields: dict[str, object]) -> None:
    with pytest.raises(ValidationError):
        EnsembleSpec.model_validate(fields)


def test_missing_angles_are_reported() -> None:
    with pytest.raises(InvalidInputError):
        gen_sectorial(EnsembleSpec(kind="sectorial"))
    with pytest.raises(InvalidInputError):
        gen_cone(EnsembleSpec(kind="cone", theta1=0.2))
