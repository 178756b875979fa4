# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: cyclic Jacobi eigensolver and charging-phase scans.

API mirrors `_kernels_py`; `qbsim.backend` picks whichever imports.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, fabs

NAME = "cython"


def jacobi_eigh(h, tol=None, max_sweeps=None):
    """Cyclic Jacobi eigendecomposition; returns (w ascending, V columns, converged)."""
    from .constants import TOLERANCES
    cdef double ctol = TOLERANCES["eig_offdiag"] if tol is None else tol
    cdef int sweeps = TOLERANCES["eig_max_sweeps"] if max_sweeps is None else max_sweeps

    a_arr = np.array(h, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = a_arr.shape[0]
    v_arr = np.eye(n, dtype=np.complex128)
    cdef double complex[:, :] a = a_arr
    cdef double complex[:, :] v = v_arr

    cdef double scale = max(1.0, float(np.abs(a_arr).max(initial=0.0)))
    cdef bint converged = False
    cdef Py_ssize_t sweep, p, q, k
    cdef double off, m, tau, t, c, s
    cdef double complex apq, f, sf, scf, xp, xq

    with nogil:
        for sweep in range(sweeps + 1):
            off = 0.0
            for p in range(n):
                for q in range(n):
                    if p != q:
                        off += abs(a[p, q]) * abs(a[p, q])
            if sqrt(off) <= ctol * scale:
                converged = True
                break
            if sweep == sweeps:  # budget exhausted; the check above was the final word
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    m = abs(apq)
                    if m <= 1e-300:
                        continue
                    f = apq / m
                    tau = (a[q, q].real - a[p, p].real) / (2.0 * m)
                    if tau >= 0.0:
                        t = 1.0 / (fabs(tau) + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (fabs(tau) + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    sf = s * f
                    scf = s * f.conjugate()
                    for k in range(n):
                        xp = a[k, p]
                        xq = a[k, q]
                        a[k, p] = xp * c - xq * scf
                        a[k, q] = xp * sf + xq * c
                    for k in range(n):
                        xp = a[p, k]
                        xq = a[q, k]
                        a[p, k] = xp * c - xq * sf
                        a[q, k] = xp * scf + xq * c
                    for k in range(n):
                        xp = v[k, p]
                        xq = v[k, q]
                        v[k, p] = xp * c - xq * scf
                        v[k, q] = xp * sf + xq * c

    w = np.real(np.diagonal(a_arr)).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v_arr[:, order], bool(converged)


cdef inline void _fill_unitary(double complex[:, :] u, int axis_code, double ph) nogil:
    cdef double c = cos(ph)
    cdef double s = sin(ph)
    cdef double alpha = c * c
    cdef double complex lam
    cdef double beta, cs, s2
    if axis_code == 0:
        beta = -(s * s)
        lam = -0.5j * sin(2.0 * ph)
        u[0, 0] = alpha; u[1, 1] = alpha; u[2, 2] = alpha; u[3, 3] = alpha
        u[0, 3] = beta; u[3, 0] = beta; u[1, 2] = beta; u[2, 1] = beta
        u[0, 1] = lam; u[0, 2] = lam; u[1, 0] = lam; u[1, 3] = lam
        u[2, 0] = lam; u[2, 3] = lam; u[3, 1] = lam; u[3, 2] = lam
    else:
        cs = c * s
        s2 = s * s
        u[0, 0] = alpha; u[1, 1] = alpha; u[2, 2] = alpha; u[3, 3] = alpha
        u[0, 1] = -cs; u[0, 2] = -cs; u[1, 3] = -cs; u[2, 3] = -cs
        u[1, 0] = cs; u[2, 0] = cs; u[3, 1] = cs; u[3, 2] = cs
        u[0, 3] = s2; u[3, 0] = s2
        u[1, 2] = -s2; u[2, 1] = -s2


def unitary_stack(axis_code, phases):
    """Closed-form charging unitaries for an array of phases (axis 0=X, 1=Y)."""
    ph_arr = np.ascontiguousarray(phases, dtype=np.float64)
    cdef double[:] ph = ph_arr
    cdef Py_ssize_t m = ph.shape[0]
    out = np.zeros((m, 4, 4), dtype=np.complex128)
    cdef double complex[:, :, :] o = out
    cdef int code = axis_code
    cdef Py_ssize_t i
    with nogil:
        for i in range(m):
            _fill_unitary(o[i], code, ph[i])
    return out


cdef inline double _energy_after(double complex[:, :] u, double complex[:, :] rho,
                                 double complex[:, :] hm) nogil:
    # Re Tr[(U rho U^dag) H] without temporaries beyond the stack
    cdef double complex tmp[4][4]
    cdef double complex rt[4][4]
    cdef double complex acc
    cdef Py_ssize_t i, j, k
    for i in range(4):
        for j in range(4):
            acc = 0
            for k in range(4):
                acc += u[i, k] * rho[k, j]
            tmp[i][j] = acc
    for i in range(4):
        for j in range(4):
            acc = 0
            for k in range(4):
                acc += tmp[i][k] * u[j, k].conjugate()
            rt[i][j] = acc
    acc = 0
    for i in range(4):
        for j in range(4):
            acc += rt[i][j] * hm[j, i]
    return acc.real


def xi_phase_scan(h, rho_th, axis_code, phases):
    """Trace-route ergotropy Re Tr[(U rho U^dag - rho) H] over a phase grid."""
    h_arr = np.ascontiguousarray(h, dtype=np.complex128)
    r_arr = np.ascontiguousarray(rho_th, dtype=np.complex128)
    ph_arr = np.ascontiguousarray(phases, dtype=np.float64)
    cdef double complex[:, :] hm = h_arr
    cdef double complex[:, :] rho = r_arr
    cdef double[:] ph = ph_arr
    cdef Py_ssize_t m = ph.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[:] o = out
    cdef int code = axis_code
    cdef double e0 = 0.0
    cdef double complex acc = 0
    cdef Py_ssize_t i, j, t

    u_buf = np.zeros((4, 4), dtype=np.complex128)
    cdef double complex[:, :] uv = u_buf
    with nogil:
        for i in range(4):
            for j in range(4):
                acc += rho[i, j] * hm[j, i]
        e0 = acc.real
        for t in range(m):
            _fill_unitary(uv, code, ph[t])
            o[t] = _energy_after(uv, rho, hm) - e0
    return out


def coherence_phase_scan(rho, axis_code, phases):
    """l1 coherence of U rho U^dag over a phase grid."""
    r_arr = np.ascontiguousarray(rho, dtype=np.complex128)
    ph_arr = np.ascontiguousarray(phases, dtype=np.float64)
    cdef double complex[:, :] rh = r_arr
    cdef double[:] ph = ph_arr
    cdef Py_ssize_t m = ph.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[:] o = out
    cdef int code = axis_code
    cdef double complex tmp[4][4]
    cdef double complex acc
    cdef double q
    cdef Py_ssize_t i, j, k, t

    u_buf = np.zeros((4, 4), dtype=np.complex128)
    cdef double complex[:, :] uv = u_buf
    with nogil:
        for t in range(m):
            _fill_unitary(uv, code, ph[t])
            for i in range(4):
                for j in range(4):
                    acc = 0
                    for k in range(4):
                        acc += uv[i, k] * rh[k, j]
                    tmp[i][j] = acc
            q = 0.0
            for i in range(4):
                for j in range(4):
                    if i != j:
                        acc = 0
                        for k in range(4):
                            acc += tmp[i][k] * uv[j, k].conjugate()
                        q += abs(acc)
            o[t] = q
    return out
