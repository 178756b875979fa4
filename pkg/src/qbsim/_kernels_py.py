"""Numpy implementations of the hot kernels.

Mirrors the API of the compiled module `_kernels_cy`; selected at import
time by `qbsim.backend` when the extension is unavailable (or forced via
QBSIM_BACKEND=python).
"""

import numpy as np

from .constants import PY_JACOBI_DIM_LIMIT, TOLERANCES

NAME = "python"


def jacobi_eigh(h, tol=None, max_sweeps=None):
    """Cyclic Jacobi eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, eigenvector columns, converged flag).
    Dimensions above PY_JACOBI_DIM_LIMIT delegate to LAPACK, which honours
    the same contract at a scale where python-loop Jacobi is impractical.
    """
    tol = TOLERANCES["eig_offdiag"] if tol is None else tol
    max_sweeps = TOLERANCES["eig_max_sweeps"] if max_sweeps is None else max_sweeps
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    if n > PY_JACOBI_DIM_LIMIT:
        w, v = np.linalg.eigh(a)
        return w, v, True
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))

    def off_norm():
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.sqrt((np.abs(off) ** 2).sum()))

    converged = False
    for _ in range(max_sweeps):
        if off_norm() <= tol * scale:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                m = abs(apq)
                if m <= 1e-300:
                    continue
                f = apq / m
                tau = (a[q, q].real - a[p, p].real) / (2.0 * m)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # columns: G e_p = c e_p - conj(s f) e_q ; G e_q = s f e_p + c e_q
                col_p = a[:, p] * c - a[:, q] * (s * np.conj(f))
                col_q = a[:, p] * (s * f) + a[:, q] * c
                a[:, p], a[:, q] = col_p, col_q
                row_p = a[p, :] * c - a[q, :] * (s * f)
                row_q = a[p, :] * (s * np.conj(f)) + a[q, :] * c
                a[p, :], a[q, :] = row_p, row_q
                vcol_p = v[:, p] * c - v[:, q] * (s * np.conj(f))
                vcol_q = v[:, p] * (s * f) + v[:, q] * c
                v[:, p], v[:, q] = vcol_p, vcol_q
    if not converged and off_norm() <= tol * scale:
        converged = True  # target reached on the final sweep
    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order], converged


def unitary_stack(axis_code, phases):
    """Closed-form two-spin charging unitaries for an array of phases.

    axis_code 0 -> X generator (symmetric complex matrix),
    axis_code 1 -> Y generator (real rotation R(phase) x R(phase)).
    """
    ph = np.asarray(phases, dtype=float)
    m = ph.shape[0]
    c = np.cos(ph)
    s = np.sin(ph)
    u = np.empty((m, 4, 4), dtype=complex)
    alpha = c * c
    if axis_code == 0:
        beta = -(s * s)
        lam = -0.5j * np.sin(2.0 * ph)
        u[:, 0, 0] = u[:, 1, 1] = u[:, 2, 2] = u[:, 3, 3] = alpha
        u[:, 0, 3] = u[:, 3, 0] = u[:, 1, 2] = u[:, 2, 1] = beta
        for i, j in ((0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2)):
            u[:, i, j] = lam
    else:
        cs = c * s
        s2 = s * s
        u[:, 0, 0] = u[:, 1, 1] = u[:, 2, 2] = u[:, 3, 3] = alpha
        u[:, 0, 1] = u[:, 0, 2] = u[:, 1, 3] = u[:, 2, 3] = -cs
        u[:, 1, 0] = u[:, 2, 0] = u[:, 3, 1] = u[:, 3, 2] = cs
        u[:, 0, 3] = u[:, 3, 0] = s2
        u[:, 1, 2] = u[:, 2, 1] = -s2
    return u


def xi_phase_scan(h, rho_th, axis_code, phases):
    """Trace-route ergotropy Re Tr[(U rho U^dag - rho) H] over a phase grid."""
    u = unitary_stack(axis_code, phases)
    rho_t = u @ rho_th @ np.conjugate(np.swapaxes(u, 1, 2))
    e_t = np.einsum("tij,ji->t", rho_t, h).real
    e_0 = np.einsum("ij,ji->", rho_th, h).real
    return e_t - e_0


def coherence_phase_scan(rho, axis_code, phases):
    """l1 coherence of U rho U^dag over a phase grid."""
    u = unitary_stack(axis_code, phases)
    rho_t = u @ rho @ np.conjugate(np.swapaxes(u, 1, 2))
    mags = np.abs(rho_t)
    return mags.sum(axis=(1, 2)) - np.einsum("tii->t", mags)
