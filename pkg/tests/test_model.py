import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qbsim import (DimensionGuard, ModelClass, ModelParams, UnclassifiedModel,
                   build_chain_hamiltonian, build_qb_hamiltonian, classify_model, pauli)


def test_pauli_matrices():
    assert np.array_equal(pauli("x"), [[0, 1], [1, 0]])
    assert np.array_equal(pauli("y"), [[0, -1j], [1j, 0]])
    assert np.array_equal(pauli("z"), [[1, 0], [0, -1]])


def test_params_validation():
    with pytest.raises(ValueError, match="temperature"):
        ModelParams(temperature=0.0)
    with pytest.raises(ValueError, match="omega"):
        ModelParams(omega=-1.0)
    with pytest.raises(ValueError, match="theta"):
        ModelParams(theta=2.0)


def test_chain_all_zero_couplings():
    p = ModelParams(j=0.0, gamma=0.0, delta=0.0, b=0.0)
    assert np.abs(build_chain_hamiltonian(p, 2)).max() == 0.0


def test_chain_two_sites_xx_block():
    # printed global 1/4: (XX + YY)/4 has 1/2 on the (|01>,|10>) pair
    p = ModelParams(j=1.0, gamma=0.0, delta=0.0, b=0.0)
    h = build_chain_hamiltonian(p, 2)
    expected = (np.kron(oracles.SX, oracles.SX) + np.kron(oracles.SY, oracles.SY)) / 4
    assert np.allclose(h, expected)
    assert h[1, 2] == pytest.approx(0.5)


def test_chain_three_sites_embedding_oracle():
    # exchange-only: the three-site chain is the sum of two embedded pair terms
    p = ModelParams(j=1.0, gamma=0.3, delta=0.2, dz=0.1, gz=0.4, b=0.0)
    h = build_chain_hamiltonian(p, 3)
    pair = build_chain_hamiltonian(p, 2)
    left = np.kron(pair, oracles.I2)
    right = np.kron(oracles.I2, pair)
    assert np.abs(h - (left + right)).max() < 1e-14


def test_chain_three_sites_zeeman_double_counts_interior():
    # the printed Zeeman sum counts site 2 in both bond terms; odd sites carry
    # B cos(theta), even sites B sin(theta)
    p = ModelParams(j=0.0, gamma=0.0, delta=0.0, b=0.8, theta=0.5)
    h = build_chain_hamiltonian(p, 3)
    c, s = 0.8 * np.cos(0.5), 0.8 * np.sin(0.5)
    z = np.diag([1.0, -1.0]).astype(complex)
    i2 = np.eye(2, dtype=complex)
    expected = (c * np.kron(np.kron(z, i2), i2)
                + 2 * s * np.kron(np.kron(i2, z), i2)
                + c * np.kron(np.kron(i2, i2), z))
    assert np.abs(h - expected).max() < 1e-14


def test_chain_dimension_guard():
    with pytest.raises(DimensionGuard):
        build_chain_hamiltonian(ModelParams(), 13)


def test_qb_pure_zeeman():
    h = build_qb_hamiltonian(ModelParams(j=0.0, b=1.0, theta=0.0))
    assert np.allclose(h, np.diag([1, 1, -1, -1]))


def test_qb_xx_exchange_block():
    # closed-form-consistent scaling: J (XX + YY) puts 2J on the inner pair
    h = build_qb_hamiltonian(ModelParams(j=1.0, gamma=0.0, delta=0.0, b=0.0))
    assert h[1, 2] == pytest.approx(2.0)
    assert h[0, 3] == pytest.approx(0.0)


def test_qb_xyz_eigenvalue_pattern():
    # eigenvalues come out as {delta +- E, -delta +- R} with the printed radicals
    p = ModelParams(j=1.0, delta=0.5, gamma=0.5, b=1.0, theta=np.pi / 2)
    w = np.linalg.eigvalsh(build_qb_hamiltonian(p))
    r = np.sqrt(4 * p.j**2 + 1 - np.sin(2 * p.theta))
    e = np.sqrt(1 + 4 * p.gamma**2 * p.j**2 + np.sin(2 * p.theta))
    expected = np.sort([p.delta + e, p.delta - e, -p.delta + r, -p.delta - r])
    assert np.abs(w - expected).max() < 1e-12


def test_qb_matches_oracle_matrix():
    p = dict(j=-1.3, gamma=0.7, delta=-0.4, dz=0.6, gz=0.9, b=1.0, theta=0.9)
    assert np.abs(build_qb_hamiltonian(ModelParams(**p)) - oracles.h_qb(**p)).max() < 1e-14


@settings(max_examples=40, deadline=None)
@given(
    st.floats(-3, 3), st.floats(0, 1), st.floats(-2, 2),
    st.floats(-5, 5), st.floats(-5, 5), st.floats(0, np.pi / 2),
)
def test_qb_hermitian_property(j, gamma, delta, dz, gz, theta):
    h = build_qb_hamiltonian(ModelParams(j=j, gamma=gamma, delta=delta, dz=dz, gz=gz, theta=theta))
    assert np.abs(h - h.conj().T).max() < 1e-14


def test_theta_swap_symmetry():
    swap = np.eye(4)[[0, 2, 1, 3]].astype(complex)
    for theta in (0.0, 0.3, 1.1):
        a = build_qb_hamiltonian(ModelParams(j=0.8, gamma=0.4, delta=0.3, theta=theta))
        b = build_qb_hamiltonian(ModelParams(j=0.8, gamma=0.4, delta=0.3, theta=np.pi / 2 - theta))
        assert np.abs(swap @ a @ swap - b).max() < 1e-14


def test_chain_prefactor_mapping_regression():
    # chain (global 1/4, printed) with x4 couplings == battery Hamiltonian
    kw = dict(gamma=0.6, b=1.0, theta=0.8)
    qb = build_qb_hamiltonian(ModelParams(j=0.9, delta=0.3, dz=0.2, gz=0.5, **kw))
    chain = build_chain_hamiltonian(
        ModelParams(j=4 * 0.9, delta=4 * 0.3, dz=4 * 0.2, gz=4 * 0.5, **kw), 2)
    assert np.abs(qb - chain).max() < 1e-13


@pytest.mark.parametrize(
    "gamma,delta,j,expected",
    [
        (0.0, 0.0, 1.0, ModelClass.XX),
        (0.5, 0.0, 1.0, ModelClass.XY),
        (0.0, 1.0, 1.0, ModelClass.XXX),
        (0.0, 0.5, 1.0, ModelClass.XXZ),
        (0.5, 0.5, 1.0, ModelClass.XYZ),
        (1.0, 0.0, 1.0, ModelClass.ISING),
        (-1.0, 0.0, 1.0, ModelClass.ISING),
    ],
)
def test_classify_table(gamma, delta, j, expected):
    assert classify_model(ModelParams(j=j, gamma=gamma, delta=delta)) is expected


@pytest.mark.parametrize("gamma,delta", [(-0.5, 0.0), (1.5, 0.0), (1.0, 0.3)])
def test_classify_out_of_convention(gamma, delta):
    with pytest.raises(UnclassifiedModel):
        classify_model(ModelParams(gamma=gamma, delta=delta))
