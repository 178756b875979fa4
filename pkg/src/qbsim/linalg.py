"""Dense complex linear algebra: Hermitian eigenproblems, matrix exponentials,
tensor products, traces.

All operations are pure functions on immutable inputs and are safe to call
concurrently.
"""

from typing import NamedTuple

import numpy as np

from . import backend
from .constants import TOLERANCES
from .errors import ConvergenceFailure, DimensionMismatch, NonHermitian


class Spectrum(NamedTuple):
    """Eigenvalues (ascending) and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def require_hermitian(h, tol=None):
    """Raise NonHermitian unless max |H - H^dag| is within tolerance."""
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {h.shape}")
    tol = TOLERANCES["hermiticity"] if tol is None else tol
    dev = float(np.abs(h - h.conj().T).max(initial=0.0))
    if dev > tol:
        raise NonHermitian(f"matrix deviates from Hermiticity by {dev:.3e} (> {tol:.1e})")


def _canonicalize(w, v):
    """Deterministic Spectrum ordering.

    Each eigenvector is phase-normalized so its first significant component
    is real positive; degenerate groups are then ordered by lexicographic
    comparison of the normalized component sequences.
    """
    n = w.shape[0]
    floor = TOLERANCES["eig_phase_floor"]
    v = v.copy()
    for k in range(n):
        col = v[:, k]
        mags = np.abs(col)
        lead = mags.max()
        idx = int(np.argmax(mags > floor * max(lead, 1.0)))
        pivot = col[idx]
        if abs(pivot) > 0.0:
            v[:, k] = col * (np.conj(pivot) / abs(pivot))
    tie = TOLERANCES["eig_tie"] * (1.0 + float(np.abs(w).max(initial=0.0)))
    order = list(range(n))
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and w[stop] - w[start] <= tie:
            stop += 1
        if stop - start > 1:
            keys = {
                k: tuple(x for comp in v[:, k] for x in (comp.real, comp.imag))
                for k in order[start:stop]
            }
            order[start:stop] = sorted(order[start:stop], key=keys.__getitem__)
        start = stop
    order = np.array(order)
    return w[order], v[:, order]


def hermitian_eig(h) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix with deterministic ordering."""
    require_hermitian(h)
    w, v, converged = backend.jacobi_eigh(h)
    if not converged:
        raise ConvergenceFailure(
            f"Jacobi sweeps exhausted ({TOLERANCES['eig_max_sweeps']}) before reaching "
            f"off-diagonal norm {TOLERANCES['eig_offdiag']:.1e}"
        )
    w, v = _canonicalize(w, v)
    return Spectrum(w, v)


def expm_hermitian(h, c):
    """exp(c * H) for Hermitian H via spectral decomposition."""
    spec = hermitian_eig(h)
    return (spec.eigenvectors * np.exp(c * spec.eigenvalues)) @ spec.eigenvectors.conj().T


def kron(a, b):
    """Kronecker product (dense, complex)."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def trace_product(a, b) -> complex:
    """Tr[A B] = sum_ij A_ij B_ji."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"trace_product needs equal square matrices, got {a.shape} and {b.shape}")
    return complex(np.einsum("ij,ji->", a, b))
