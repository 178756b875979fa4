"""Two-spin battery Hamiltonian, general-N chain builder, and model taxonomy."""

import math
from dataclasses import dataclass, replace
from enum import Enum
from functools import reduce

import numpy as np

from .constants import MAX_CHAIN_SITES, TOLERANCES
from .errors import DimensionGuard, UnclassifiedModel
from .linalg import kron

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_ID2 = np.eye(2, dtype=complex)


class Axis(str, Enum):
    X = "x"
    Y = "y"


class ModelClass(str, Enum):
    ISING = "ising"
    XX = "xx"
    XXZ = "xxz"
    XXX = "xxx"
    XY = "xy"
    XYZ = "xyz"


def pauli(k):
    """Pauli matrix for k in {x, y, z}; convention sigma_z = diag(+1, -1)."""
    key = k.value if isinstance(k, Axis) else str(k).lower()
    return _PAULI[key].copy()


@dataclass(frozen=True)
class ModelParams:
    """All physical knobs of the two-spin battery (k_B = 1, energies in units of B)."""

    j: float = 1.0
    gamma: float = 0.0
    delta: float = 0.0
    dz: float = 0.0
    gz: float = 0.0
    b: float = 1.0
    theta: float = 0.0
    temperature: float = 0.1
    omega: float = 1.0
    axis: Axis = Axis.Y

    def __post_init__(self):
        if not self.temperature > 0:
            raise ValueError("temperature must be > 0")
        if not self.omega > 0:
            raise ValueError("omega must be > 0")
        if not -1e-12 <= self.theta <= math.pi / 2 + 1e-12:
            raise ValueError("theta must lie in [0, pi/2]")
        object.__setattr__(self, "axis", Axis(self.axis))

    def updated(self, **changes) -> "ModelParams":
        return replace(self, **changes)


def build_qb_hamiltonian(params: ModelParams):
    """4x4 battery Hamiltonian in the (|00>, |01>, |10>, |11>) basis.

    The xy exchange enters with plain J (not J/4): this is the scaling every
    downstream closed form (partition function, thermal-state elements,
    ergotropy, capacity) is built on, and the one that reproduces the
    reference figures. See the regression test against the chain builder
    for the printed-prefactor mapping.
    """
    sx, sy, sz = _PAULI["x"], _PAULI["y"], _PAULI["z"]
    h = params.j * ((1 + params.gamma) * kron(sx, sx) + (1 - params.gamma) * kron(sy, sy))
    h += params.delta * kron(sz, sz)
    h += params.b * math.cos(params.theta) * kron(sz, _ID2)
    h += params.b * math.sin(params.theta) * kron(_ID2, sz)
    h += params.dz * (kron(sx, sy) - kron(sy, sx))
    h += params.gz * (kron(sx, sy) + kron(sy, sx))
    return h


def _embed_pair(op4, j, n):
    """Embed a two-site operator acting on sites (j, j+1), 1-based."""
    factors = [_ID2] * (j - 1) + [op4] + [_ID2] * (n - j - 1)
    return reduce(np.kron, factors).astype(complex)


def _site_field(params, j):
    # odd sites carry B cos(theta), even sites B sin(theta); matches the
    # two-spin assignment (B1, B2) = B(cos, sin)
    return params.b * (math.cos(params.theta) if j % 2 == 1 else math.sin(params.theta))


def build_chain_hamiltonian(params: ModelParams, n: int):
    """General-N nearest-neighbour chain with the printed global 1/4 prefactor.

    The Zeeman sum is kept literal, which double-counts interior sites for
    n > 2; all quantitative analysis in this package is n = 2.
    """
    if n < 2:
        raise ValueError("chain needs at least 2 sites")
    if n > MAX_CHAIN_SITES:
        raise DimensionGuard(f"n = {n} exceeds the dense-matrix guard ({MAX_CHAIN_SITES})")
    sx, sy, sz = _PAULI["x"], _PAULI["y"], _PAULI["z"]
    pair = params.j * ((1 + params.gamma) * np.kron(sx, sx) + (1 - params.gamma) * np.kron(sy, sy))
    pair = pair + params.delta * np.kron(sz, sz)
    pair = pair + params.dz * (np.kron(sx, sy) - np.kron(sy, sx))
    pair = pair + params.gz * (np.kron(sx, sy) + np.kron(sy, sx))
    pair = pair / 4.0
    dim = 2**n
    h = np.zeros((dim, dim), dtype=complex)
    for j in range(1, n):
        h += _embed_pair(pair, j, n)
        zeeman = _site_field(params, j) * np.kron(sz, _ID2) + _site_field(params, j + 1) * np.kron(_ID2, sz)
        h += _embed_pair(zeeman, j, n)
    return h


def classify_model(params: ModelParams) -> ModelClass:
    """Model-class taxonomy on (gamma, delta, j); equality tested at 1e-12."""
    eq = TOLERANCES["classify_eq"]
    g, d, j = params.gamma, params.delta, params.j
    if abs(abs(g) - 1.0) <= eq:
        if abs(d) <= eq:
            return ModelClass.ISING
        raise UnclassifiedModel(f"gamma = {g} with delta != 0 has no table row")
    if abs(g) <= eq:
        if abs(d) <= eq:
            return ModelClass.XX
        if abs(d - j) <= eq:
            return ModelClass.XXX
        return ModelClass.XXZ
    if 0 < g < 1:
        if abs(d) <= eq:
            return ModelClass.XY
        return ModelClass.XYZ
    raise UnclassifiedModel(f"gamma = {g} outside the table conventions ({{0}} U (0,1) U {{+-1}})")
