"""Grid-scan + golden-section maximization helpers."""

import math

import numpy as np

_INVPHI = (math.sqrt(5) - 1) / 2


def golden_max(f, lo, hi, tol):
    """Golden-section maximum of a scalar function on [lo, hi]."""
    a, b = float(lo), float(hi)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = (a + b) / 2
    return x, f(x)


def maximize_scalar(f_vec, window, scan_points, tol):
    """Dense scan followed by golden-section refinement.

    f_vec maps an ndarray of abscissae to an ndarray of values (non-finite
    entries are treated as missing). Returns (argmax, max).
    """
    lo, hi = float(window[0]), float(window[1])
    if not hi > lo:
        raise ValueError("window must have positive length")
    xs = np.linspace(lo, hi, scan_points)
    ys = np.asarray(f_vec(xs), dtype=float)
    finite = np.isfinite(ys)
    if not finite.any():
        return lo, 0.0
    ys = np.where(finite, ys, -np.inf)
    i = int(np.argmax(ys))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, scan_points - 1)]

    def scalar(x):
        v = float(f_vec(np.array([x]))[0])
        return v if math.isfinite(v) else -math.inf

    x_star, y_star = golden_max(scalar, a, b, tol)
    if y_star >= ys[i]:
        return x_star, y_star
    return float(xs[i]), float(ys[i])
