import math

import numpy as np
import pytest

from conftest import random_matrix
from numrad.errors import DomainError, InvalidInputError, NotConeConfinedError
from numrad.fov import (
    RayCone,
    SectorCone,
    boundary_polygon,
    cone_fit,
    crawford_number,
    is_accretive,
    is_accretive_dissipative,
    numerical_radius,
    sectorial_index,
    sectorial_index_sweep,
    support_function,
)
from numrad.generators import EnsembleSpec, gen_cone, gen_sectorial, random_unitary, stream
from numrad.linalg import operator_norm


def test_remark_radius(remark: np.ndarray) -> None:
    certified = numerical_radius(remark)
    assert certified.value == pytest.approx(math.sqrt(13.0), abs=1e-9)
    assert certified.error_bound <= 1e-10 + 1e-12
    assert certified.lower <= math.sqrt(13.0) <= certified.upper


@pytest.mark.parametrize(
    "matrix, expected",
    [
        (np.eye(3), 1.0),
        (np.array([[0.0, 1.0], [0.0, 0.0]]), 0.5),
        (np.zeros((2, 2)), 0.0),
        (np.array([[5.0 - 1.0j]]), abs(5.0 - 1.0j)),
    ],
)
def test_radius_of_simple_matrices(matrix: np.ndarray, expected: float) -> None:
    certified = numerical_radius(matrix)
    assert certified.value == pytest.approx(expected, abs=1e-9)


def test_radius_of_normal_matrices_is_the_spectral_radius() -> None:
    for index in range(25):
        rng = stream(99, index)
        n = int(rng.integers(2, 9))
        values = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        u = random_unitary(n, rng)
        a = (u * values[None, :]) @ u.conj().T
        scale = float(np.max(np.abs(values)))
        assert abs(numerical_radius(a).value - scale) <= 1e-9 * max(scale, 1.0)


def test_radius_lies_between_half_norm_and_norm(rng: np.random.Generator) -> None:
    for _ in range(10):
        a = random_matrix(rng, 5)
        certified = numerical_radius(a)
        norm = operator_norm(a)
        assert 0.5 * norm <= certified.upper
        assert certified.lower <= norm
        assert certified.error_bound <= 1e-10 + 1e-12 * np.linalg.norm(a)


@pytest.mark.parametrize("phi", [0.4, 1.9, -2.7])
def test_radius_is_rotation_invariant(rng: np.random.Generator, phi: float) -> None:
    a = random_matrix(rng, 5)
    plain = numerical_radius(a)
    rotated = numerical_radius(np.exp(1j * phi) * a)
    assert abs(rotated.value - plain.value) <= plain.error_bound + rotated.error_bound + 1e-12


def test_radius_is_unitarily_invariant(rng: np.random.Generator) -> None:
    for _ in range(5):
        a = random_matrix(rng, 4)
        u = random_unitary(4, rng)
        plain = numerical_radius(a)
        similar = numerical_radius(u.conj().T @ a @ u)
        assert abs(similar.value - plain.value) <= plain.error_bound + similar.error_bound + 1e-12


def test_certificate_beats_the_lipschitz_grid(rng: np.random.Generator) -> None:
    certified = numerical_radius(random_matrix(rng, 6))
    assert certified.error_bound < certified.lipschitz_bound
    assert certified.evaluations >= 720


def test_radius_rejects_bad_tolerance(remark: np.ndarray) -> None:
    with pytest.raises(InvalidInputError):
        numerical_radius(remark, tol=0.0)
    with pytest.raises(InvalidInputError):
        numerical_radius(remark, grid=4)


def test_support_function_of_the_remark(remark: np.ndarray) -> None:
    p, x = support_function(remark, 0.0)
    assert p == pytest.approx(3.0)
    assert abs(np.vdot(x, remark @ x) - (3.0 + 2.0j)) <= 1e-12


def test_remark_sector(remark: np.ndarray) -> None:
    sector = sectorial_index(remark)
    assert sector.gamma == pytest.approx(math.atan(2.0 / 3.0), abs=1e-12)
    assert sector.sin == pytest.approx(2.0 / math.sqrt(13.0), abs=1e-12)


def test_hermitian_positive_definite_has_zero_index() -> None:
    assert sectorial_index(np.diag([1.0, 4.0])).gamma == 0.0
    assert SectorCone(gamma=0.0).csc == math.inf


def test_sectorial_index_requires_accretivity() -> None:
    with pytest.raises(DomainError):
        sectorial_index(np.diag([1.0, -1.0]))


def test_index_methods_agree() -> None:
    spec = EnsembleSpec(kind="sectorial", n=5, gamma_target=0.9)
    for index in range(10):
        a = gen_sectorial(spec, stream(5, index))
        assert abs(sectorial_index(a).gamma - sectorial_index_sweep(a).gamma) <= 1e-6


def test_accretivity_reports_the_crawford_number() -> None:
    a = np.array([[2.0, 1.0j], [1.0j, 3.0]])
    accretive, delta = is_accretive(a)
    assert accretive
    assert delta == pytest.approx(2.0)
    assert crawford_number(a) == pytest.approx(2.0)
    assert not is_accretive(np.diag([1.0, 0.0]))[0]


def test_accretive_dissipative() -> None:
    assert is_accretive_dissipative((1.0 + 1.0j) * np.eye(2))
    assert not is_accretive_dissipative(np.diag([1.0 + 1.0j, 1.0 - 1.0j]))


def test_cone_fit_on_lower_cone_samples() -> None:
    spec = EnsembleSpec(kind="cone", n=4, theta1=0.3, theta2=0.8)
    for index in range(8):
        cone = cone_fit(gen_cone(spec, stream(3, index)))
        assert cone.orientation == "lower"
        assert cone.theta1 >= 0.3 - 1e-6
        assert cone.theta2 <= 0.8 + 1e-6


def test_cone_fit_on_upper_cone_samples() -> None:
    spec = EnsembleSpec(kind="cone", n=3, theta1=0.2, theta2=0.5, orientation="upper")
    cone = cone_fit(gen_cone(spec))
    assert cone.orientation == "upper"
    assert 0.2 - 1e-6 <= cone.theta1 <= cone.theta2 <= 0.5 + 1e-6


def test_polygon_cone_covers_the_pencil_cone() -> None:
    a = gen_cone(EnsembleSpec(kind="cone", n=4, theta1=0.4, theta2=0.7))
    exact = cone_fit(a)
    outer = cone_fit(a, method="polygon", N=512)
    assert outer.theta1 <= exact.theta1 + 1e-12
    assert outer.theta2 >= exact.theta2 - 1e-12


def test_cone_fit_straddling_the_axis(remark: np.ndarray) -> None:
    with pytest.raises(NotConeConfinedError):
        cone_fit(np.diag([1.0 + 1.0j, 1.0 - 1.0j]))
    cone = cone_fit(remark)
    assert cone.orientation == "upper"
    assert cone.theta1 == pytest.approx(0.0, abs=1e-12)
    assert cone.theta2 == pytest.approx(math.atan(2.0 / 3.0), abs=1e-12)


def test_cone_fit_of_a_diagonal_lower_cone() -> None:
    cone = cone_fit(np.diag([np.exp(-1j * math.pi / 6), 2.0 * np.exp(-1j * math.pi / 4)]))
    assert cone.orientation == "lower"
    assert cone.theta1 == pytest.approx(math.pi / 6, abs=1e-9)
    assert cone.theta2 == pytest.approx(math.pi / 4, abs=1e-9)
    assert cone.gamma1 == pytest.approx(math.pi / 3, abs=1e-9)


def test_ray_cone_gamma1() -> None:
    cone = RayCone(theta1=0.3, theta2=0.8)
    assert cone.gamma1 == pytest.approx(max(0.8, math.pi / 2 - 0.3))
    assert cone.argument_range() == (-0.8, -0.3)
    with pytest.raises(ValueError):
        RayCone(theta1=0.8, theta2=0.3)


def test_boundary_of_the_identity() -> None:
    scan = boundary_polygon(np.eye(3), N=16)
    np.testing.assert_allclose(scan.boundary_points, np.ones(16), atol=1e-12)


def test_boundary_of_a_segment() -> None:
    scan = boundary_polygon(np.diag([1.0, 1.0j]), N=64)
    points = scan.boundary_points
    np.testing.assert_allclose(points.real + points.imag, 1.0, atol=1e-12)
    assert np.all(points.real >= -1e-12) and np.all(points.imag >= -1e-12)


def test_boundary_polygons_enclose_the_range(remark: np.ndarray) -> None:
    scan = boundary_polygon(remark, N=256)
    w = math.sqrt(13.0)
    assert scan.contains(scan.boundary_points, atol=1e-10)
    assert w * math.cos(math.pi / 256) <= scan.max_modulus <= w + 1e-12
    assert scan.hausdorff_gap() < 0.05
    assert np.max(np.abs(scan.outer_vertices())) >= w - 1e-12


def test_boundary_needs_eight_points() -> None:
    with pytest.raises(InvalidInputError):
        boundary_polygon(np.eye(2), N=4)


def test_boundary_of_the_nilpotent_block_is_a_circle() -> None:
    scan = boundary_polygon([[0.0, 1.0], [0.0, 0.0]], N=64)
    np.testing.assert_allclose(np.abs(scan.boundary_points), 0.5, atol=1e-12)
    assert scan.max_modulus == pytest.approx(0.5, abs=1e-12)


def test_hausdorff_gap_shrinks_as_the_scan_refines() -> None:
    a = random_matrix(stream(5), 4)
    gaps = [boundary_polygon(a, N=n).hausdorff_gap() for n in (32, 64, 128, 256)]
    assert all(finer <= coarser for coarser, finer in zip(gaps, gaps[1:])), gaps
