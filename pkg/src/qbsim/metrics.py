"""Battery performance indicators: ergotropy (three routes), work, power,
efficiency, capacity (two routes), and l1 coherence."""

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import backend
from ._search import maximize_scalar
from .constants import TIME_SCAN_POINTS, TOLERANCES, UP_STATE_INDEX
from .errors import DimensionMismatch, EfficiencyContractWarning, NotDefined, RegimeError
from .linalg import hermitian_eig, trace_product
from .model import Axis, ModelParams, build_qb_hamiltonian
from .thermal import gibbs_state


@dataclass(frozen=True)
class ErgotropyBreakdown:
    """The three ergotropy routes at one (params, t) point plus their spread."""

    spectral: float
    trace_formula: float
    closed_form: Optional[float]
    agreement: float


@dataclass(frozen=True)
class ClosedFormAux:
    """Ingredients of the closed-form ergotropy/capacity expressions."""

    a: float
    b: float
    c: float
    d: float
    g: float
    h: float
    eps_a: float
    eps_b: float
    f_a: float
    f_b: float
    s_param: float


class CapacityMode(str, Enum):
    LITERAL11 = "literal11"
    TOP_EIGENSTATE = "top_eigenstate"


def _ieee(fn, x):
    # math.exp/cosh/sinh raise on overflow; C/numpy return inf, which is the
    # behaviour the as-published evaluation path must reproduce
    try:
        return fn(x)
    except OverflowError:
        return math.inf


def closed_form_aux(params: ModelParams) -> ClosedFormAux:
    """a = R^2, b = E^2, c = -delta + gamma J + J, and the T-dependent factors."""
    s2 = math.sin(2 * params.theta)
    a = 4 * params.dz**2 - s2 + 4 * params.j**2 + 1
    b = 1 + 4 * params.gz**2 + 4 * params.j**2 * params.gamma**2 + s2
    t = params.temperature
    sa, sb = math.sqrt(a), math.sqrt(b)
    return ClosedFormAux(
        a=a,
        b=b,
        c=-params.delta + params.gamma * params.j + params.j,
        d=_ieee(math.exp, sb / t),
        g=_ieee(math.exp, 2 * params.delta / t),
        h=_ieee(math.exp, (2 * params.delta + sb) / t),
        eps_a=_ieee(math.cosh, sa / t),
        eps_b=_ieee(math.cosh, sb / t),
        f_a=_ieee(math.sinh, sa / t),
        f_b=_ieee(math.sinh, sb / t),
        s_param=math.sin(params.theta) + math.cos(params.theta),
    )


def ergotropy_spectral(rho, h) -> float:
    """sum_{m,n} r_m nu_n (|<psi_n|r_m>|^2 - delta_mn), r descending, nu ascending."""
    hs = hermitian_eig(h)
    rs = hermitian_eig(rho)
    r_desc = rs.eigenvalues[::-1]
    v_desc = rs.eigenvectors[:, ::-1]
    overlap = np.abs(hs.eigenvectors.conj().T @ v_desc) ** 2
    return float(hs.eigenvalues @ (overlap @ r_desc) - r_desc @ hs.eigenvalues)


def ergotropy_trace(rho, rho_th, h) -> float:
    """xi = Re Tr[(rho - rho_th) H]."""
    value = trace_product(np.asarray(rho) - np.asarray(rho_th), h)
    return float(value.real)


def _regime_check(params: ModelParams):
    if params.axis is not Axis.Y:
        raise RegimeError("closed-form ergotropy is derived for Y-axis charging")
    if abs(params.b - 1.0) > 1e-12:
        raise RegimeError("closed-form ergotropy assumes B = 1")


def _xi_closed_raw(params: ModelParams, phases):
    """The closed-form ergotropy evaluated exactly as printed (plain doubles).

    Overflows at low temperature / strong couplings exactly like the
    published pipeline; callers wanting the artifact-free value use
    `_xi_closed_guarded`.
    """
    _regime_check(params)
    aux = closed_form_aux(params)
    a, b, c = aux.a, aux.b, aux.c
    sa, sb = math.sqrt(a), math.sqrt(b)
    j, gamma = params.j, params.gamma
    s2 = math.sin(2 * params.theta)
    d, g, h = aux.d, aux.g, aux.h
    ea, eb, fa, fb = aux.eps_a, aux.eps_b, aux.f_a, aux.f_b
    ph = np.asarray(phases, dtype=float)
    cos2 = np.cos(2 * ph)
    with np.errstate(over="ignore", invalid="ignore"):
        pre = 2 * np.sin(ph) ** 2 / (math.sqrt(a * b) * (2 * h * ea + d**2 + 1))
        t1 = c * (
            -2 * math.sqrt(a * b) * h * ea
            + sa * cos2 * (-2 * sb * d * g * ea + sb * (d**2 + 1) + 2 * gamma * (d**2 - 1) * j)
            + 2 * math.sqrt(a * b) * d * eb
        )
        t2 = 2 * sb * fa * (h * (a + 2 * j * (c - 2 * j)) + 2 * c * d * g * j * cos2 + s2 * (h - d * g))
        t3 = 2 * sa * d * fb * (b + 2 * gamma * j * (c - 2 * gamma * j))
        return pre * (t1 + t2 + t3)


def _xi_closed_guarded(params: ModelParams, phases):
    """Closed-form ergotropy with the dominant exponential scale factored out.

    Algebraically identical to `_xi_closed_raw` (both reduce to four
    Boltzmann exponents); safe down to T ~ 1e-3.
    """
    aux = closed_form_aux(params)
    a, b, c = aux.a, aux.b, aux.c
    sa, sb = math.sqrt(a), math.sqrt(b)
    j, gamma = params.j, params.gamma
    delta, t = params.delta, params.temperature
    ph = np.asarray(phases, dtype=float)
    cos2 = np.cos(2 * ph)
    x = np.array([2 * delta + sb + sa, 2 * delta + sb - sa, 2 * sb, 0.0]) / t
    ex = np.exp(x - x.max())
    k1 = sb * (a + 2 * j * (c - 2 * j)) + 2 * sb * c * j * cos2
    n1 = -c * sa * sb * (1 + cos2) + k1
    n2 = -c * sa * sb * (1 + cos2) - k1
    k3 = 2 * c * sa * gamma * j * cos2 + sa * (b + 2 * gamma * j * (c - 2 * gamma * j))
    n3 = c * sa * sb * (1 + cos2) + k3
    n4 = c * sa * sb * (1 + cos2) - k3
    num = n1 * ex[0] + n2 * ex[1] + n3 * ex[2] + n4 * ex[3]
    den = sa * sb * ex.sum()
    return 2 * np.sin(ph) ** 2 * num / den


def ergotropy_closed_form(params: ModelParams, t: float, guarded: bool = True) -> float:
    """Closed-form ergotropy at time t (Y-axis charging, B = 1)."""
    _regime_check(params)
    phases = np.array([params.omega * t])
    fn = _xi_closed_guarded if guarded else _xi_closed_raw
    return float(fn(params, phases)[0])


def ergotropy_breakdown(params: ModelParams, t: float) -> ErgotropyBreakdown:
    """All ergotropy routes at (params, t); closed form only in its regime."""
    h = build_qb_hamiltonian(params)
    rho_th = gibbs_state(h, params.temperature)
    phase = params.omega * t
    u = backend.unitary_stack(0 if params.axis is Axis.X else 1, np.array([phase]))[0]
    rho = u @ rho_th @ u.conj().T
    spectral = ergotropy_spectral(rho, h)
    trace_val = ergotropy_trace(rho, rho_th, h)
    closed: Optional[float] = None
    try:
        closed = ergotropy_closed_form(params, t)
    except RegimeError:
        pass
    routes = [spectral, trace_val] + ([closed] if closed is not None else [])
    agreement = max(abs(p - q) for p in routes for q in routes)
    return ErgotropyBreakdown(spectral=spectral, trace_formula=trace_val, closed_form=closed, agreement=agreement)


def work(rho, reference, h) -> float:
    """W = Re Tr[(rho - reference) H]; the default protocol reference is the
    thermal state, making W coincide with the trace-route ergotropy."""
    return ergotropy_trace(rho, reference, h)


def average_power(w: float, t: float) -> float:
    """<p> = W(t)/t."""
    if not t > 0:
        raise ValueError("t must be > 0")
    return w / t


def peak_average_power(params: ModelParams, t_window=None, scan_points=TIME_SCAN_POINTS):
    """Maximize W(t)/t over the window; returns (t_star, p_star)."""
    h = build_qb_hamiltonian(params)
    rho_th = gibbs_state(h, params.temperature)
    axis_code = 0 if params.axis is Axis.X else 1
    if t_window is None:
        t_window = (0.0, math.pi / params.omega)

    def p_of_t(ts):
        ts = np.asarray(ts, dtype=float)
        xi = backend.xi_phase_scan(h, rho_th, axis_code, params.omega * ts)
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = np.where(ts > 0, xi / np.where(ts > 0, ts, 1.0), 0.0)
        return vals

    return maximize_scalar(p_of_t, t_window, scan_points, TOLERANCES["golden_t"])


def efficiency(w: float, xi: float) -> float:
    """eta = W / xi, flagged when it exceeds 1 beyond tolerance."""
    if xi == 0:
        raise NotDefined("efficiency undefined at xi = 0")
    eta = w / xi
    if eta > 1 + TOLERANCES["efficiency_flag"]:
        warnings.warn(f"efficiency {eta} exceeds 1", EfficiencyContractWarning, stacklevel=2)
    return eta


def capacity_numeric(h, rho_down, mode: CapacityMode = CapacityMode.LITERAL11) -> float:
    """K = Tr[H rho_up] - Tr[H rho_down].

    LITERAL11 takes rho_up as the basis state fully aligned with the +z
    field (index UP_STATE_INDEX, the source's "|11>"); TOP_EIGENSTATE the
    projector onto H's top eigenvector.
    """
    h = np.asarray(h)
    rho_down = np.asarray(rho_down)
    if h.shape != rho_down.shape:
        raise DimensionMismatch(f"H {h.shape} vs rho {rho_down.shape}")
    if CapacityMode(mode) is CapacityMode.LITERAL11:
        e_up = float(h[UP_STATE_INDEX, UP_STATE_INDEX].real)
    else:
        e_up = float(hermitian_eig(h).eigenvalues[-1])
    return e_up - float(trace_product(h, rho_down).real)


def capacity_closed_form(params: ModelParams, guarded: bool = True) -> float:
    """The closed-form K (requires B = 1)."""
    if abs(params.b - 1.0) > 1e-12:
        raise RegimeError("closed-form capacity assumes B = 1")
    aux = closed_form_aux(params)
    sa, sb = math.sqrt(aux.a), math.sqrt(aux.b)
    s = aux.s_param
    delta, t = params.delta, params.temperature
    if guarded:
        x = np.array([2 * delta + sb + sa, 2 * delta + sb - sa, 2 * sb, 0.0]) / t
        ex = np.exp(x - x.max())
        num = sa * (ex[0] - ex[1]) + sb * (ex[2] - ex[3]) + s * ex[2] + (2 * delta + s) * (ex[0] + ex[1]) + s * ex[3]
        den = ex.sum()
        return float(num / den)
    d, h, ea, fa = aux.d, aux.h, aux.eps_a, aux.f_a
    num = 2 * sa * fa * h + sb * (d**2 - 1) + d**2 * s + 2 * h * ea * (2 * delta + s) + s
    den = d**2 + 2 * h * ea + 1
    return num / den


def l1_coherence(rho) -> float:
    """Sum of absolute off-diagonal elements in the computational basis."""
    mags = np.abs(np.asarray(rho)).copy()
    np.fill_diagonal(mags, 0.0)
    return float(mags.sum())
