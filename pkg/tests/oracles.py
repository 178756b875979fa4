"""Independent reference implementations used as test oracles.

Everything here is built on LAPACK (numpy.linalg / scipy.linalg) and direct
formula evaluation, deliberately disjoint from the package's Jacobi/kernel
code paths.
"""

import numpy as np
import scipy.linalg

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def h_qb(j=1.0, gamma=0.0, delta=0.0, dz=0.0, gz=0.0, b=1.0, theta=0.0):
    h = j * ((1 + gamma) * np.kron(SX, SX) + (1 - gamma) * np.kron(SY, SY))
    h = h + delta * np.kron(SZ, SZ)
    h = h + b * np.cos(theta) * np.kron(SZ, I2) + b * np.sin(theta) * np.kron(I2, SZ)
    h = h + dz * (np.kron(SX, SY) - np.kron(SY, SX))
    h = h + gz * (np.kron(SX, SY) + np.kron(SY, SX))
    return h


def gibbs(h, temperature):
    w, v = np.linalg.eigh(h)
    ex = np.exp(-(w - w.min()) / temperature)
    ex /= ex.sum()
    return (v * ex) @ v.conj().T


def charging_unitary(axis, omega, t):
    s = SX if axis == "x" else SY
    hc = omega * (np.kron(s, I2) + np.kron(I2, s))
    return scipy.linalg.expm(-1j * hc * t)


def xi_trace(h, rho_th, u):
    rho = u @ rho_th @ u.conj().T
    return float(np.real(np.trace((rho - rho_th) @ h)))


def xi_spectral(rho, h):
    nu, psi = np.linalg.eigh(h)
    r, rv = np.linalg.eigh(rho)
    r, rv = r[::-1], rv[:, ::-1]
    overlap = np.abs(psi.conj().T @ rv) ** 2
    return float(nu @ (overlap @ r) - r @ nu)


def boltzmann_populations(h, temperature):
    w = np.linalg.eigvalsh(h)
    ex = np.exp(-(w - w.min()) / temperature)
    return w, ex / ex.sum()


def charpoly_roots(h, samples=200001, tol=1e-12):
    """All eigenvalues of a Hermitian matrix by det(H - x I) sign-change bisection.

    Requires a non-degenerate spectrum (simple sign changes).
    """
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    radius = float(np.abs(h).sum(axis=1).max()) + 1.0  # Gershgorin bound
    xs = np.linspace(-radius, radius, samples)

    def p(x):
        return float(np.real(np.linalg.det(h - x * np.eye(n))))

    vals = np.array([p(x) for x in xs])
    roots = []
    for i in range(samples - 1):
        if vals[i] == 0.0:
            roots.append(xs[i])
        elif vals[i] * vals[i + 1] < 0:
            lo, hi = xs[i], xs[i + 1]
            while hi - lo > tol:
                mid = (lo + hi) / 2
                if p(lo) * p(mid) <= 0:
                    hi = mid
                else:
                    lo = mid
            roots.append((lo + hi) / 2)
    return np.array(sorted(roots))


def random_params_dict(rng, t_lo=0.05, t_hi=2.0, with_dm=True):
    return dict(
        j=float(rng.choice([-1.0, 1.0]) * rng.uniform(0.2, 2.0)),
        gamma=float(rng.uniform(0, 1)),
        delta=float(rng.uniform(-1, 1)),
        dz=float(rng.uniform(0, 2)) if with_dm else 0.0,
        gz=float(rng.uniform(0, 2)) if with_dm else 0.0,
        theta=float(rng.uniform(0, np.pi / 2)),
        temperature=float(rng.uniform(t_lo, t_hi)),
    )
