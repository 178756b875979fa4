import numpy as np
import pytest

import oracles
from qbsim import (DimensionMismatch, ModelParams, build_qb_hamiltonian, charging_hamiltonian,
                   charging_unitary_closed, charging_unitary_numeric, evolve, gibbs_state,
                   trace_product)

PHASE_GRID = np.arange(0.0, np.pi + 1e-9, 0.1)


def test_hamiltonian_x_pattern():
    h = charging_hamiltonian("x", 1.0)
    expected = np.kron(oracles.SX, oracles.I2) + np.kron(oracles.I2, oracles.SX)
    assert np.array_equal(h, expected)
    assert np.allclose(np.sort(np.linalg.eigvalsh(h)), [-2.0, 0.0, 0.0, 2.0])


def test_hamiltonian_linear_in_omega():
    assert np.allclose(charging_hamiltonian("y", 2.0),
                       2 * (np.kron(oracles.SY, oracles.I2) + np.kron(oracles.I2, oracles.SY)))


def test_hamiltonian_requires_positive_omega():
    with pytest.raises(ValueError):
        charging_hamiltonian("x", 0.0)


def test_numeric_identity_at_t_zero():
    u = charging_unitary_numeric("y", 1.0, 0.0)
    assert np.abs(u.matrix - np.eye(4)).max() < 1e-14


def test_numeric_flip_at_quarter_period():
    # both generators produce an anti-diagonal flip at phase pi/2
    uy = charging_unitary_numeric("y", 1.0, np.pi / 2).matrix
    assert np.abs(uy - np.fliplr(np.diag([1.0, -1.0, -1.0, 1.0]))).max() < 1e-12
    ux = charging_unitary_numeric("x", 1.0, np.pi / 2).matrix
    assert np.abs(ux + np.fliplr(np.diag([1.0, 1.0, 1.0, 1.0]))).max() < 1e-12


@pytest.mark.parametrize("axis", ["x", "y"])
def test_closed_matches_numeric_on_phase_grid(axis):
    for phase in PHASE_GRID:
        closed = charging_unitary_closed(axis, phase).matrix
        numeric = charging_unitary_numeric(axis, 1.0, phase).matrix
        assert np.abs(closed - numeric).max() < 1e-10


@pytest.mark.parametrize("axis", ["x", "y"])
def test_closed_matches_scipy_expm(axis):
    for phase in (0.3, 1.1, 2.0):
        closed = charging_unitary_closed(axis, phase).matrix
        ref = oracles.charging_unitary(axis, 1.0, phase)
        assert np.abs(closed - ref).max() < 1e-12


def test_closed_identity_and_entry_pattern():
    assert np.abs(charging_unitary_closed("y", 0.0).matrix - np.eye(4)).max() == 0.0
    # the alpha/beta/lambda entry pattern belongs to the X generator
    u = charging_unitary_closed("x", np.pi / 4).matrix
    assert np.abs(np.abs(u) - 0.5).max() < 1e-12
    assert u[0, 1] == pytest.approx(-0.5j)
    assert u[0, 3] == pytest.approx(-0.5)


@pytest.mark.parametrize("axis", ["x", "y"])
def test_unitarity_and_periodicity(axis):
    for phase in PHASE_GRID:
        u = charging_unitary_closed(axis, phase).matrix
        assert np.abs(u.conj().T @ u - np.eye(4)).max() < 1e-10
        u2 = charging_unitary_closed(axis, phase + np.pi).matrix
        assert np.abs(u - u2).max() < 1e-10


def test_evolve_identity_and_trace():
    p = ModelParams(j=1.0, temperature=0.2, theta=0.4)
    rho = gibbs_state(build_qb_hamiltonian(p), p.temperature)
    assert np.abs(evolve(rho, np.eye(4, dtype=complex)) - rho).max() == 0.0
    charged = evolve(rho, charging_unitary_closed("y", 1.1))
    assert np.trace(charged).real == pytest.approx(1.0, abs=1e-12)


def test_evolve_raises_charging_energy():
    p = ModelParams(j=1.0, gamma=0.0, delta=0.0, theta=0.0, temperature=0.1)
    h = build_qb_hamiltonian(p)
    rho = gibbs_state(h, p.temperature)
    charged = evolve(rho, charging_unitary_closed("y", np.pi / 2))
    assert trace_product(charged, h).real > trace_product(rho, h).real


def test_evolve_preserves_spectrum_random():
    rng = np.random.default_rng(29)
    for _ in range(100):
        p = ModelParams(**oracles.random_params_dict(rng))
        rho = gibbs_state(build_qb_hamiltonian(p), p.temperature)
        u = charging_unitary_closed(rng.choice(["x", "y"]), rng.uniform(0, 2 * np.pi))
        charged = evolve(rho, u)
        a = np.sort(np.linalg.eigvalsh(rho))
        b = np.sort(np.linalg.eigvalsh(charged))
        assert np.abs(a - b).max() < 1e-9


def test_charging_is_cyclic():
    p = ModelParams(j=1.0, gamma=0.5, delta=0.5, theta=0.6, temperature=0.3)
    h = build_qb_hamiltonian(p)
    rho = gibbs_state(h, p.temperature)
    u = charging_unitary_closed("y", np.pi / 2)
    twice = evolve(evolve(rho, u), u)
    assert trace_product(twice, h).real == pytest.approx(trace_product(rho, h).real, abs=1e-9)


def test_evolve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        evolve(np.eye(2) / 2, charging_unitary_closed("y", 0.3))
