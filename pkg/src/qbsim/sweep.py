"""Parameter-grid engine: sweeps, per-point time maximization, threshold detection."""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Callable, Optional

import numpy as np

from . import backend
from ._search import maximize_scalar
from ._version import __version__
from .constants import TIME_SCAN_POINTS, TOLERANCES
from .errors import NoThreshold, SchemaError
from .metrics import _xi_closed_raw, capacity_closed_form, capacity_numeric
from .model import Axis, ModelParams, build_qb_hamiltonian
from .thermal import gibbs_closed_form, gibbs_state


class Metric(str, Enum):
    ERGOTROPY = "ergotropy"
    ERGOTROPY_MAX = "ergotropy_max"
    CAPACITY = "capacity"
    COHERENCE_MAX = "coherence_max"
    WORK = "work"
    POWER = "power"


class EvalMode(str, Enum):
    """numeric: guarded arithmetic, correct at any temperature.

    as_published: the closed forms evaluated in plain double precision with
    non-finite results recorded as zero — the arithmetic that produced the
    reference D_z/G_z threshold figures (see README numerical notes).
    """

    NUMERIC = "numeric"
    AS_PUBLISHED = "as_published"


_TIME_METRICS = {Metric.ERGOTROPY, Metric.WORK, Metric.POWER}
_PARAM_AXES = ("j", "gamma", "delta", "dz", "gz", "b", "theta", "temperature", "omega")
AXIS_NAMES = _PARAM_AXES + ("omega_t",)


@dataclass(frozen=True)
class SweepAxis:
    name: str
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise SchemaError(f"unknown axis name {self.name!r}; must be one of {AXIS_NAMES}")
        if self.steps < 2:
            raise SchemaError("axis steps must be >= 2")

    def values(self):
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepConfig:
    base: ModelParams
    axis1: SweepAxis
    metric: Metric
    axis2: Optional[SweepAxis] = None
    time_window: tuple = (0.0, math.pi)
    mode: EvalMode = EvalMode.NUMERIC

    def __post_init__(self):
        object.__setattr__(self, "metric", Metric(self.metric))
        object.__setattr__(self, "mode", EvalMode(self.mode))
        names = [self.axis1.name] + ([self.axis2.name] if self.axis2 else [])
        if len(set(names)) != len(names):
            raise SchemaError("axis1 and axis2 must differ")
        n_time = names.count("omega_t")
        if self.metric in _TIME_METRICS and n_time != 1:
            raise SchemaError(f"metric {self.metric.value} needs exactly one omega_t axis")
        if self.metric not in _TIME_METRICS and n_time != 0:
            raise SchemaError(f"metric {self.metric.value} sweeps parameters, not omega_t")


@dataclass
class SweepResult:
    axis1_values: np.ndarray
    axis2_values: Optional[np.ndarray]
    values: np.ndarray  # shape (axis1.steps, axis2.steps or 1)
    metadata: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ThresholdReport:
    threshold_x: float
    pre_peak: float
    post_mean: float
    window: tuple


def _axis_code(params: ModelParams) -> int:
    return 0 if params.axis is Axis.X else 1


def _apply_axis(params: ModelParams, name: str, value: float) -> ModelParams:
    return params.updated(**{name: float(value)})


def _time_series(params: ModelParams, phases, metric: Metric, mode: EvalMode):
    """Metric values over a phase (= Omega t) grid; returns (values, n_zeroed)."""
    if mode is EvalMode.NUMERIC:
        h = build_qb_hamiltonian(params)
        rho_th = gibbs_state(h, params.temperature)
        xi = backend.xi_phase_scan(h, rho_th, _axis_code(params), np.asarray(phases, dtype=float))
        zeroed = 0
    else:
        xi = np.asarray(_xi_closed_raw(params, phases), dtype=float)
        bad = ~np.isfinite(xi)
        zeroed = int(bad.sum())
        xi = np.where(bad, 0.0, xi)
    if metric is Metric.POWER:
        ts = np.asarray(phases, dtype=float) / params.omega
        with np.errstate(divide="ignore", invalid="ignore"):
            xi = np.where(ts > 0, xi / np.where(ts > 0, ts, 1.0), 0.0)
    return xi, zeroed


def _xi_max_evaluator(params: ModelParams, mode: EvalMode) -> Callable:
    if mode is EvalMode.NUMERIC:
        h = build_qb_hamiltonian(params)
        rho_th = gibbs_state(h, params.temperature)
        code = _axis_code(params)

        def f(ts):
            return backend.xi_phase_scan(h, rho_th, code, params.omega * np.asarray(ts, dtype=float))

    else:

        def f(ts):
            return _xi_closed_raw(params, params.omega * np.asarray(ts, dtype=float))

    return f


def _coherence_max_evaluator(params: ModelParams, mode: EvalMode) -> Optional[Callable]:
    """None signals a non-finite as-published thermal state (value becomes 0)."""
    if mode is EvalMode.NUMERIC:
        rho = gibbs_state(build_qb_hamiltonian(params), params.temperature)
    else:
        rho = gibbs_closed_form(params, variant="corrected", guarded=False)
        if not np.all(np.isfinite(rho)):
            return None
    code = _axis_code(params)

    def f(ts):
        return backend.coherence_phase_scan(rho, code, params.omega * np.asarray(ts, dtype=float))

    return f


def _point_metric(params: ModelParams, metric: Metric, mode: EvalMode, time_window) -> tuple:
    """Scalar metric at one parameter point; returns (value, n_zeroed)."""
    if metric is Metric.CAPACITY:
        if mode is EvalMode.NUMERIC:
            h = build_qb_hamiltonian(params)
            return capacity_numeric(h, gibbs_state(h, params.temperature)), 0
        k = capacity_closed_form(params, guarded=False)
        return (k, 0) if math.isfinite(k) else (0.0, 1)
    if metric is Metric.ERGOTROPY_MAX:
        f = _xi_max_evaluator(params, mode)
        _, value = maximize_scalar(f, time_window, TIME_SCAN_POINTS, TOLERANCES["golden_t"])
        if not math.isfinite(value):
            return 0.0, 1
        return value, 0
    if metric is Metric.COHERENCE_MAX:
        f = _coherence_max_evaluator(params, mode)
        if f is None:
            return 0.0, 1
        _, value = maximize_scalar(f, time_window, TIME_SCAN_POINTS, TOLERANCES["golden_t"])
        return value, 0
    raise ValueError(f"{metric} is not a point metric")


def maximize_over_time(params: ModelParams, metric=Metric.ERGOTROPY, t_window=(0.0, math.pi),
                       mode: EvalMode = EvalMode.NUMERIC, scan_points: int = TIME_SCAN_POINTS):
    """Dense scan + golden-section refinement of a time-dependent metric.

    metric may be Metric.ERGOTROPY / Metric.COHERENCE_MAX or a vectorized
    callable mapping times to values. Returns (t_star, value).
    """
    if callable(metric) and not isinstance(metric, Metric):
        f = metric
    elif Metric(metric) is Metric.COHERENCE_MAX:
        f = _coherence_max_evaluator(params, mode)
        if f is None:
            return t_window[0], 0.0
    else:
        f = _xi_max_evaluator(params, mode)
    return maximize_scalar(f, t_window, scan_points, TOLERANCES["golden_t"])


def _resolve_threads(threads: Optional[int]) -> int:
    if threads is None:
        threads = int(os.environ.get("QBSIM_THREADS", "1") or 1)
    return max(1, threads)


def run_sweep(config: SweepConfig, threads: Optional[int] = None) -> SweepResult:
    """Evaluate the metric over the configured grid.

    Grid points are independent pure evaluations; rows are distributed over
    a thread pool and written to disjoint slices, so the result is identical
    for any worker count.
    """
    threads = _resolve_threads(threads)
    x1 = config.axis1.values()
    x2 = config.axis2.values() if config.axis2 else None
    n1 = len(x1)
    n2 = len(x2) if x2 is not None else 1
    values = np.zeros((n1, n2), dtype=float)
    zero_counts = np.zeros(max(n1, n2), dtype=int)

    if config.metric in _TIME_METRICS:
        time_axis, param_axis = (config.axis1, config.axis2) if config.axis1.name == "omega_t" else (
            config.axis2, config.axis1)
        phases = time_axis.values()

        def run_row(k):
            params = config.base if param_axis is None else _apply_axis(
                config.base, param_axis.name, (x1 if param_axis is config.axis1 else x2)[k])
            try:
                series, zeroed = _time_series(params, phases, config.metric, config.mode)
            except Exception as exc:
                raise type(exc)(f"at {param_axis.name if param_axis else 'base'}[{k}]: {exc}") from exc
            if config.axis1.name == "omega_t":
                values[:, k] = series
            else:
                values[k, :] = series
            zero_counts[k] = zeroed

        n_rows = 1 if param_axis is None else (n1 if param_axis is config.axis1 else n2)
    else:

        def run_row(i):
            row_zeroed = 0
            for k in range(n2):
                params = _apply_axis(config.base, config.axis1.name, x1[i])
                if config.axis2 is not None:
                    params = _apply_axis(params, config.axis2.name, x2[k])
                try:
                    values[i, k], zeroed = _point_metric(params, config.metric, config.mode,
                                                         config.time_window)
                except Exception as exc:
                    raise type(exc)(
                        f"at {config.axis1.name}[{i}]"
                        + (f", {config.axis2.name}[{k}]" if config.axis2 else "")
                        + f": {exc}"
                    ) from exc
                row_zeroed += zeroed
            zero_counts[i] = row_zeroed

        n_rows = n1

    if threads == 1 or n_rows == 1:
        for r in range(n_rows):
            run_row(r)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run_row, range(n_rows)))

    meta = {
        "metric": config.metric.value,
        "mode": config.mode.value,
        "axis1": {"name": config.axis1.name, "start": config.axis1.start,
                  "stop": config.axis1.stop, "steps": config.axis1.steps},
        "axis2": None if config.axis2 is None else {
            "name": config.axis2.name, "start": config.axis2.start,
            "stop": config.axis2.stop, "steps": config.axis2.steps},
        "time_window": list(config.time_window),
        "base": {f.name: (getattr(config.base, f.name).value if f.name == "axis"
                          else getattr(config.base, f.name)) for f in fields(config.base)},
        "version": __version__,
        "nonfinite_zeroed": int(zero_counts.sum()),
    }
    return SweepResult(axis1_values=x1, axis2_values=x2, values=values, metadata=meta)


def evaluate_point(config: SweepConfig, x1: float, x2: Optional[float] = None) -> float:
    """Metric at a single grid point, through the same code path as run_sweep."""
    if config.metric in _TIME_METRICS:
        if config.axis1.name == "omega_t":
            phase, other = x1, x2
            other_axis = config.axis2
        else:
            phase, other = x2, x1
            other_axis = config.axis1
        params = config.base if other_axis is None else _apply_axis(config.base, other_axis.name, other)
        series, _ = _time_series(params, np.array([phase]), config.metric, config.mode)
        return float(series[0])
    params = _apply_axis(config.base, config.axis1.name, x1)
    if config.axis2 is not None:
        params = _apply_axis(params, config.axis2.name, x2)
    value, _ = _point_metric(params, config.metric, config.mode, config.time_window)
    return float(value)


def detect_threshold(xs, ys, metric_fn: Optional[Callable] = None) -> ThresholdReport:
    """Locate the collapse point: the largest x whose value still exceeds the
    detection fraction of the series peak, with everything after it below.

    metric_fn(x) -> y, when provided, refines the collapse boundary by
    bisection to the configured x tolerance.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise ValueError("xs and ys must be equal-length 1-D series")
    if len(xs) < 8:
        raise ValueError("need at least 8 samples")
    if np.any(np.diff(xs) <= 0):
        raise ValueError("xs must be strictly ascending")
    peak = float(ys.max())
    frac = TOLERANCES["threshold_fraction"]
    if peak <= 0:
        raise NoThreshold("series has no positive peak")
    thr = frac * peak
    above = ys > thr
    if above[-1] or not above.any():
        raise NoThreshold(f"series never settles below {frac:.0%} of its peak")
    j = int(np.max(np.nonzero(above)[0]))
    x_lo, x_hi = float(xs[j]), float(xs[j + 1])
    lo, hi = x_lo, x_hi
    if metric_fn is not None:
        while hi - lo > TOLERANCES["threshold_x"]:
            mid = (lo + hi) / 2
            y_mid = float(metric_fn(mid))
            if math.isfinite(y_mid) and y_mid > thr:
                lo = mid
            else:
                hi = mid
    threshold_x = (lo + hi) / 2
    pre_peak = float(ys[: j + 1].max())
    post_mean = float(ys[j + 1:].mean())
    if post_mean > frac * pre_peak:
        raise NoThreshold("post-collapse mean exceeds the detection criterion")
    return ThresholdReport(threshold_x=threshold_x, pre_peak=pre_peak, post_mean=post_mean,
                           window=(x_lo, x_hi))
