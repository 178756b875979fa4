"""Charging Hamiltonians, cyclic charging unitaries, and state evolution."""

import math
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch
from .linalg import expm_hermitian, kron
from .model import Axis, pauli

_ID2 = np.eye(2, dtype=complex)


class ChargingUnitary(NamedTuple):
    """4x4 charging unitary together with its generator axis and phase = Omega*t."""

    matrix: np.ndarray
    axis: Axis
    phase: float


def charging_hamiltonian(axis, omega: float):
    """Omega (sigma_axis x I + I x sigma_axis)."""
    if not omega > 0:
        raise ValueError("omega must be > 0")
    s = pauli(Axis(axis))
    return omega * (kron(s, _ID2) + kron(_ID2, s))


def charging_unitary_numeric(axis, omega: float, t: float) -> ChargingUnitary:
    """exp(-i H_C t) through the spectral matrix exponential."""
    if t < 0:
        raise ValueError("t must be >= 0")
    u = expm_hermitian(charging_hamiltonian(axis, omega), -1j * t)
    return ChargingUnitary(matrix=u, axis=Axis(axis), phase=omega * t)


def charging_unitary_closed(axis, phase: float) -> ChargingUnitary:
    """Closed-form charging unitary at phase = Omega*t.

    Axis Y exponentiates to the real matrix R(phase) x R(phase) with entries
    built from alpha = cos^2, 1-alpha and theta_pm = +-sin(2 phase)/2; axis X
    to the symmetric complex matrix with entries alpha, beta = -sin^2 and
    lambda = -i sin(2 phase)/2. (The published equation pair attaches these
    two matrices to the opposite axes; the assignment here is fixed by the
    matrix exponentials themselves.)
    """
    axis = Axis(axis)
    alpha = math.cos(phase) ** 2
    if axis is Axis.X:
        beta = -math.sin(phase) ** 2
        lam = -0.5j * math.sin(2 * phase)
        u = np.array(
            [
                [alpha, lam, lam, beta],
                [lam, alpha, beta, lam],
                [lam, beta, alpha, lam],
                [beta, lam, lam, alpha],
            ],
            dtype=complex,
        )
    else:
        th_p = 0.5 * math.sin(2 * phase)
        th_m = -th_p
        u = np.array(
            [
                [alpha, th_m, th_m, 1 - alpha],
                [th_p, alpha, alpha - 1, th_m],
                [th_p, alpha - 1, alpha, th_m],
                [1 - alpha, th_p, th_p, alpha],
            ],
            dtype=complex,
        )
    return ChargingUnitary(matrix=u, axis=axis, phase=phase)


def evolve(rho_th, u):
    """U rho U^dag; accepts a ChargingUnitary or a bare matrix."""
    m = u.matrix if isinstance(u, ChargingUnitary) else np.asarray(u, dtype=complex)
    rho_th = np.asarray(rho_th, dtype=complex)
    if rho_th.shape != m.shape:
        raise DimensionMismatch(f"state {rho_th.shape} vs unitary {m.shape}")
    return m @ rho_th @ m.conj().T
