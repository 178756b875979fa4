"""Kernel backend selection: compiled Cython core with numpy fallback.

QBSIM_BACKEND=python|cython forces a choice; default prefers the compiled
core and silently falls back when the extension is missing.
"""

import os

from . import _kernels_py

_FORCED = os.environ.get("QBSIM_BACKEND", "auto").strip().lower()

if _FORCED in ("python", "py"):
    _impl = _kernels_py
elif _FORCED in ("cython", "compiled", "c"):
    from . import _kernels_cy as _impl  # ImportError here is deliberate: user forced it
else:
    try:
        from . import _kernels_cy as _impl
    except ImportError:
        _impl = _kernels_py

NAME = _impl.NAME
jacobi_eigh = _impl.jacobi_eigh
unitary_stack = _impl.unitary_stack
xi_phase_scan = _impl.xi_phase_scan
coherence_phase_scan = _impl.coherence_phase_scan


def available_backends():
    """Names of importable kernel backends."""
    names = ["python"]
    try:
        from . import _kernels_cy  # noqa: F401
        names.append("cython")
    except ImportError:
        pass
    return names


def get_backend(name):
    """Return a kernel module by name ('python' or 'cython')."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels_cy
        return _kernels_cy
    raise ValueError(f"unknown backend {name!r}")
