"""Gibbs thermal state (numeric and closed form), partition function, passivity."""

import math
from dataclasses import dataclass

import numpy as np

from .constants import TOLERANCES
from .errors import RegimeError
from .linalg import hermitian_eig, require_hermitian
from .model import ModelParams


@dataclass(frozen=True)
class ThermalAuxiliaries:
    """Closed-form helpers: R, E radicals, phi/chi couplings, partition function."""

    r_param: float
    e_param: float
    phi: complex
    chi: complex
    z: float


def thermal_auxiliaries(params: ModelParams) -> ThermalAuxiliaries:
    r"""R = sqrt(4Dz^2 - sin2theta + 4J^2 + 1), E = sqrt(1 + 4Gz^2 + 4g^2J^2 + sin2theta).

    Both radicands are non-negative for theta in [0, pi/2]. The z field holds
    the closed-form partition function evaluated as printed, which (like the
    printed expression) can overflow to inf at extreme T; the numeric
    `gibbs_state` path is shift-guarded instead.
    """
    s2 = math.sin(2 * params.theta)
    r_param = math.sqrt(4 * params.dz**2 - s2 + 4 * params.j**2 + 1)
    e_param = math.sqrt(1 + 4 * params.gz**2 + 4 * params.j**2 * params.gamma**2 + s2)
    return ThermalAuxiliaries(
        r_param=r_param,
        e_param=e_param,
        phi=params.dz + 1j * params.j,
        chi=params.gz + 1j * params.gamma * params.j,
        z=partition_function_closed(params),
    )


def partition_function(h, temperature: float) -> float:
    """Z = sum_mu exp(-nu_mu / T), via a nu_min shift re-multiplied for stability."""
    if not temperature > 0:
        raise ValueError("temperature must be > 0")
    w = hermitian_eig(h).eigenvalues
    shift = w.min()
    return float(math.exp(-shift / temperature) * np.exp(-(w - shift) / temperature).sum())


def _closed_exponents(params: ModelParams):
    """Boltzmann exponents of the four closed-form levels: E-d, -(d+E), d+R, d-R."""
    s2 = math.sin(2 * params.theta)
    r = math.sqrt(4 * params.dz**2 - s2 + 4 * params.j**2 + 1)
    e = math.sqrt(1 + 4 * params.gz**2 + 4 * params.j**2 * params.gamma**2 + s2)
    d = params.delta
    return r, e, np.array([e - d, -(d + e), d + r, d - r]) / params.temperature


def partition_function_closed(params: ModelParams) -> float:
    """The printed Z: 2{cosh(d/T)[cosh(E/T)+cosh(R/T)] + sinh(d/T)[cosh(R/T)-cosh(E/T)]}."""
    _, _, x = _closed_exponents(params)
    return float(np.exp(x).sum())


def gibbs_state(h, temperature: float):
    """exp(-H/T)/Z with the spectrum shifted by nu_min before exponentiation."""
    if not temperature > 0:
        raise ValueError("temperature must be > 0")
    spec = hermitian_eig(h)
    weights = np.exp(-(spec.eigenvalues - spec.eigenvalues.min()) / temperature)
    weights /= weights.sum()
    return (spec.eigenvectors * weights) @ spec.eigenvectors.conj().T


def gibbs_closed_form(params: ModelParams, variant: str = "corrected", guarded: bool = True):
    """Thermal state assembled from the closed-form matrix elements (requires B = 1).

    variant "printed" keeps the published rho_33 argument cos(theta - pi/4);
    "corrected" (default) uses cos(theta + pi/4) = (cos - sin)/sqrt(2), the
    form consistent with its rho_22 partner and with the numeric Gibbs state.
    With guarded=True the common exponential scale is factored out so low
    temperatures cannot overflow; guarded=False reproduces plain double
    evaluation (the "as published" arithmetic).
    """
    if abs(params.b - 1.0) > 1e-12:
        raise RegimeError("closed-form thermal elements assume B = 1")
    if variant not in ("corrected", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    t = params.temperature
    theta = params.theta
    r, e, x = _closed_exponents(params)
    p = math.sqrt(2) * math.sin(theta + math.pi / 4)  # cos(theta) + sin(theta)
    q22 = math.sqrt(2) * math.sin(theta - math.pi / 4) / r
    if variant == "printed":
        q33 = math.sqrt(2) * math.cos(theta - math.pi / 4) / r
    else:
        q33 = math.sqrt(2) * math.cos(theta + math.pi / 4) / r
    phi = params.dz + 1j * params.j
    chi = params.gz + 1j * params.gamma * params.j

    with np.errstate(over="ignore", invalid="ignore"):
        ex = np.exp(x - x.max()) if guarded else np.exp(x)
        e_up, e_dn, r_up, r_dn = ex  # e^{(E-d)/T}, e^{-(d+E)/T}, e^{(d+R)/T}, e^{(d-R)/T}
        z = ex.sum()
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = (e_up * (e - p) + e_dn * (e + p)) / (2 * e)
        rho[1, 1] = (1 + q22) * r_up / 2 + (1 - q22) * r_dn / 2
        rho[2, 2] = (1 + q33) * r_up / 2 + (1 - q33) * r_dn / 2
        rho[3, 3] = (e_up * (e + p) + e_dn * (e - p)) / (2 * e)
        rho[0, 3] = 1j * chi * (e_up - e_dn) / e
        rho[3, 0] = np.conj(rho[0, 3])
        rho[1, 2] = -1j * np.conj(phi) * (r_up - r_dn) / r
        rho[2, 1] = np.conj(rho[1, 2])
        return rho / z


def is_passive(rho, h) -> bool:
    """True iff rho is diagonal in H's eigenbasis with non-increasing populations."""
    rho = np.asarray(rho)
    h = np.asarray(h)
    if rho.shape != h.shape:
        raise ValueError(f"state and Hamiltonian dims differ: {rho.shape} vs {h.shape}")
    require_hermitian(h)
    spec = hermitian_eig(h)
    in_basis = spec.eigenvectors.conj().T @ rho @ spec.eigenvectors
    off = in_basis - np.diag(np.diag(in_basis))
    if np.abs(off).max(initial=0.0) > TOLERANCES["passivity_offdiag"]:
        return False
    pops = np.real(np.diag(in_basis))
    return bool(np.all(np.diff(pops) <= TOLERANCES["passivity_population"]))
