import numpy as np
import pytest

from triphase import euler, gellmann, linalg3, states
from triphase.errors import NotUnitNormError

SQRT3 = np.sqrt(3.0)


def test_south_pole_values():
    n = states.bloch_vector(0.0, 0.0, 0.0, 0.0)
    expected = np.zeros(8)
    expected[7] = -1.0
    assert np.allclose(n, expected, atol=1e-15)
    rho = states.density_from_bloch(n)
    assert linalg3.max_abs(rho - np.diag([0.0, 0.0, 1.0])) <= 1e-15


def test_equator_values():
    n = states.bloch_vector(0.0, 0.0, 0.0, np.pi / 2)
    assert n[2] == pytest.approx(SQRT3 / 2, abs=1e-15)
    assert n[7] == pytest.approx(0.5, abs=1e-15)
    assert np.allclose(n[3:7], 0.0, atol=1e-15)


def test_bloch_vector_is_vectorized(rng):
    grid = rng.uniform(0.0, np.pi, size=(7, 4))
    batch = states.bloch_vector(grid[:, 0], grid[:, 1], grid[:, 2], grid[:, 3])
    assert batch.shape == (7, 8)
    for row, coords in zip(batch, grid):
        assert np.allclose(row, states.bloch_vector(*coords))


def test_pure_state_norm_and_chi_phase(rng):
    alpha, beta, gamma, theta = rng.uniform(0.0, np.pi, size=4)
    psi = states.pure_state(alpha, beta, gamma, theta)
    assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-15)
    chi = 0.83
    shifted = states.pure_state(alpha, beta, gamma, theta, chi=chi)
    assert np.allclose(shifted, np.exp(1j * chi) * psi, atol=1e-15)


def test_pure_state_is_coset_column(rng):
    alpha, beta, gamma, theta = rng.uniform(0.0, np.pi, size=4)
    u = euler.coset_representative(alpha, beta, gamma, theta)
    psi = states.pure_state(alpha, beta, gamma, theta)
    assert np.allclose(u[:, 2], psi, atol=1e-14)


def test_density_routes_agree(rng):
    for _ in range(25):
        alpha, beta, gamma, theta = rng.uniform(0.0, np.pi, size=4)
        psi = states.pure_state(alpha, beta, gamma, theta)
        outer = np.outer(psi, psi.conj())
        n = states.bloch_vector(alpha, beta, gamma, theta)
        assert linalg3.max_abs(outer - states.density_from_bloch(n)) <= 1e-12
        coset = euler.coset_project(euler.coset_representative(alpha, beta, gamma, theta))
        assert linalg3.max_abs(outer - coset) <= 1e-12


def test_bloch_vector_unit_and_idempotent(rng):
    for _ in range(50):
        n = states.bloch_vector(*rng.uniform(0.0, np.pi, size=4))
        assert abs(n @ n - 1.0) <= 1e-12
        assert np.max(np.abs(gellmann.star(n, n) - n)) <= 1e-12
        assert states.is_pure(n)


def test_density_from_bloch_rejects_bad_input():
    with pytest.raises(NotUnitNormError):
        states.density_from_bloch(np.full(8, 0.2))
    with pytest.raises(ValueError):
        states.density_from_bloch(np.ones(5))


def test_unit_norm_but_not_pure():
    e8 = np.zeros(8)
    e8[7] = 1.0
    assert not states.is_pure(e8)
    rho = states.density_from_bloch(e8)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-15)
    assert np.min(np.linalg.eigvalsh(rho)) < -0.2


def test_is_pure_shape_check():
    with pytest.raises(ValueError):
        states.is_pure(np.ones(3))


def test_diagonal_density_exact_trace(rng):
    for theta_s, phi_s in rng.uniform(0.0, np.pi, size=(25, 2)):
        rho = states.diagonal_density(theta_s, phi_s)
        probs = np.diag(rho).real
        assert probs.sum() == 1.0
        assert np.all(probs >= -1e-15)
        assert linalg3.max_abs(rho - np.diag(probs)) == 0.0


def test_diagonal_density_poles():
    rho = states.diagonal_density(0.0, 0.0)
    assert np.allclose(np.diag(rho), [0.0, 0.0, 1.0])
    rho = states.diagonal_density(0.0, np.pi / 2)
    assert np.diag(rho)[0] == pytest.approx(1.0, abs=1e-15)
