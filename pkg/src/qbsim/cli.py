"""Command-line surface: figure reproduction, ad-hoc metrics, config sweeps.

Exit codes: 0 success, 2 usage/validation errors, 3 I/O failures.
"""

import argparse
import json
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import backend
from ._version import __version__
from .errors import NoThreshold, NotDefined, QbsimError, RegimeError, SchemaError, UnclassifiedModel, UnknownFigure
from .metrics import (CapacityMode, average_power, capacity_numeric, efficiency,
                      ergotropy_breakdown, l1_coherence, peak_average_power)
from .model import Axis, ModelParams, build_qb_hamiltonian, classify_model
from .output import write_manifest, write_sweep_csv, write_sweep_svg
from .presets import figure_description, figure_ids, figure_preset
from .sweep import (EvalMode, Metric, SweepAxis, SweepConfig, detect_threshold,
                    evaluate_point, run_sweep)
from .thermal import gibbs_state

_MODEL_PRESETS = {
    "xx": (0.0, 0.0),
    "xy": (0.5, 0.0),
    "xxz": (0.0, 0.5),
    "xyz": (0.5, 0.5),
    "xxx": (0.0, None),  # delta = J
    "ising": (1.0, 0.0),
}


# ---------------------------------------------------------------------------
# config file handling (flat TOML-style sections; python 3.10 has no tomllib)

_BASE_KEYS = {"j", "gamma", "delta", "dz", "gz", "b", "theta", "temperature", "omega", "axis"}
_AXIS_KEYS = {"name", "min", "max", "steps"}
_METRIC_KEYS = {"name", "mode", "time_min", "time_max"}
_SECTIONS = {"base": _BASE_KEYS, "axis1": _AXIS_KEYS, "axis2": _AXIS_KEYS, "metric": _METRIC_KEYS}


def _parse_scalar(raw: str):
    s = raw.strip()
    if (s.startswith('"') and s.endswith('"')) or (s.startswith("'") and s.endswith("'")):
        return s[1:-1]
    if s.lower() in ("true", "false"):
        return s.lower() == "true"
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def parse_config_text(text: str) -> SweepConfig:
    """Parse the sweep config format; invalid keys are all reported at once."""
    sections: dict = {}
    current = None
    bad_keys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip() if not raw.strip().startswith('"') else raw.strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current not in _SECTIONS:
                bad_keys.append(f"[{current}]")
                current = None
            else:
                sections.setdefault(current, {})
            continue
        if "=" not in line:
            raise SchemaError(f"line {lineno}: expected key = value, got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip().lower()
        if current is None:
            bad_keys.append(key)
            continue
        if key not in _SECTIONS[current]:
            bad_keys.append(f"{current}.{key}")
            continue
        sections[current][key] = _parse_scalar(val)
    if bad_keys:
        raise SchemaError("unknown config keys: " + ", ".join(bad_keys))
    if "axis1" not in sections:
        raise SchemaError("missing required section [axis1]")
    if "metric" not in sections or "name" not in sections["metric"]:
        raise SchemaError("missing required key metric.name")

    def build_axis(sec_name):
        sec = sections[sec_name]
        missing = [f"{sec_name}.{k}" for k in ("name", "min", "max", "steps") if k not in sec]
        if missing:
            raise SchemaError("missing required keys: " + ", ".join(missing))
        return SweepAxis(str(sec["name"]), float(sec["min"]), float(sec["max"]), int(sec["steps"]))

    try:
        base = ModelParams(**sections.get("base", {}))
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"invalid [base] section: {exc}") from exc
    msec = sections["metric"]
    try:
        metric = Metric(str(msec["name"]).lower())
    except ValueError as exc:
        raise SchemaError(f"unknown metric {msec['name']!r}") from exc
    try:
        mode = EvalMode(str(msec.get("mode", "numeric")).lower())
    except ValueError as exc:
        raise SchemaError(f"unknown mode {msec['mode']!r}") from exc
    window = (float(msec.get("time_min", 0.0)), float(msec.get("time_max", math.pi)))
    return SweepConfig(
        base=base,
        axis1=build_axis("axis1"),
        axis2=build_axis("axis2") if "axis2" in sections else None,
        metric=metric,
        time_window=window,
        mode=mode,
    )


def render_config_toml(config: SweepConfig) -> str:
    """The config file text equivalent to a SweepConfig (manifest reproduction aid)."""
    lines = ["[base]"]
    base = config.base
    for key in sorted(_BASE_KEYS):
        val = getattr(base, key)
        lines.append(f'{key} = "{val.value}"' if key == "axis" else f"{key} = {val!r}")
    for name, axis in (("axis1", config.axis1), ("axis2", config.axis2)):
        if axis is None:
            continue
        lines += [f"[{name}]", f'name = "{axis.name}"', f"min = {axis.start!r}",
                  f"max = {axis.stop!r}", f"steps = {axis.steps}"]
    lines += ["[metric]", f'name = "{config.metric.value}"', f'mode = "{config.mode.value}"',
              f"time_min = {config.time_window[0]!r}", f"time_max = {config.time_window[1]!r}"]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands

def _summarize(result, config) -> dict:
    vals = result.values
    i, k = np.unravel_index(int(np.argmax(vals)), vals.shape)
    summary = {
        "max_value": float(vals[i, k]),
        "argmax_axis1": float(result.axis1_values[i]),
    }
    if result.axis2_values is not None:
        summary["argmax_axis2"] = float(result.axis2_values[k])
    if result.axis2_values is None and config.metric in (Metric.ERGOTROPY_MAX, Metric.CAPACITY):
        try:
            rep = detect_threshold(
                result.axis1_values, vals[:, 0],
                metric_fn=lambda x: evaluate_point(config, x),
            )
            summary[f"threshold_{config.axis1.name}"] = rep.threshold_x
            summary["threshold_window"] = list(rep.window)
        except NoThreshold:
            summary[f"threshold_{config.axis1.name}"] = None
    return summary


def _emit(result, config, out_dir, stem, fmt, command) -> int:
    t0 = time.monotonic()
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        outputs = [write_sweep_csv(out / f"{stem}.csv", result)]
        if fmt == "csv+svg":
            outputs.append(write_sweep_svg(out / f"{stem}.svg", result, title=stem))
        write_manifest(
            out / f"{stem}.manifest.json",
            command=command,
            config_snapshot={"metadata": result.metadata, "config_toml": render_config_toml(config)},
            outputs=outputs,
            wall_time_s=time.monotonic() - t0,
        )
    except OSError as exc:
        print(f"error: cannot write outputs: {exc}", file=sys.stderr)
        return 3
    summary = _summarize(result, config)
    for key, val in summary.items():
        print(f"{key}: {val}")
    return 0


def cmd_figure(args) -> int:
    try:
        config = figure_preset(args.id)
    except UnknownFigure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = run_sweep(config, threads=args.threads)
    print(f"figure {args.id.lower()}: {figure_description(args.id)}")
    return _emit(result, config, args.out, args.id.lower(), args.format,
                 command=" ".join(sys.argv))


def cmd_sweep(args) -> int:
    try:
        text = Path(args.config).read_text()
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 3
    try:
        config = parse_config_text(text)
    except (SchemaError, QbsimError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = run_sweep(config, threads=args.threads)
    stem = Path(args.config).stem
    return _emit(result, config, args.out, stem, args.format, command=" ".join(sys.argv))


def _params_from_args(args) -> ModelParams:
    gamma, delta = args.gamma, args.delta
    if args.model:
        g_preset, d_preset = _MODEL_PRESETS[args.model]
        if gamma is None:
            gamma = g_preset
        if delta is None:
            delta = args.j if d_preset is None else d_preset * math.copysign(1.0, args.j)
    return ModelParams(
        j=args.j,
        gamma=0.0 if gamma is None else gamma,
        delta=0.0 if delta is None else delta,
        dz=args.dz,
        gz=args.gz,
        b=args.b,
        theta=args.theta,
        temperature=args.temperature,
        omega=args.omega,
        axis=Axis(args.axis),
    )


def cmd_metrics(args) -> int:
    try:
        params = _params_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    t = args.omega_t / params.omega
    h = build_qb_hamiltonian(params)
    rho_th = gibbs_state(h, params.temperature)
    breakdown = ergotropy_breakdown(params, t)
    xi = breakdown.trace_formula
    w = xi  # default protocol: reference = thermal state
    try:
        model = classify_model(params).value
    except UnclassifiedModel as exc:
        model = f"unclassified ({exc})"
    try:
        eta = efficiency(w, xi)
    except NotDefined:
        eta = None
    t_peak, p_peak = peak_average_power(params)
    row_order = [
        ("model", model),
        ("backend", backend.NAME),
        ("thermal_energy", float(np.real(np.trace(rho_th @ h)))),
        ("charged_energy", float(np.real(np.trace(rho_th @ h))) + xi),
        ("ergotropy_spectral", breakdown.spectral),
        ("ergotropy_trace", xi),
        ("ergotropy_closed_form", breakdown.closed_form),
        ("ergotropy_agreement", breakdown.agreement),
        ("work", w),
        ("average_power", average_power(w, t) if t > 0 else 0.0),
        ("peak_average_power", p_peak),
        ("peak_power_time", t_peak),
        ("efficiency", eta),
        ("capacity_literal11", capacity_numeric(h, rho_th, CapacityMode.LITERAL11)),
        ("capacity_top_eigenstate", capacity_numeric(h, rho_th, CapacityMode.TOP_EIGENSTATE)),
        ("coherence_thermal", l1_coherence(rho_th)),
    ]
    if args.json:
        print(json.dumps(dict(row_order), indent=2, sort_keys=True))
    else:
        width = max(len(k) for k, _ in row_order)
        for key, val in row_order:
            shown = "n/a" if val is None else (f"{val:.12g}" if isinstance(val, float) else val)
            print(f"{key:<{width}}  {shown}")
    return 0


def cmd_presets(_args) -> int:
    for fid in figure_ids():
        print(f"{fid:<5} {figure_description(fid)}")
    return 0


# ---------------------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--out", default="./out", help="output directory")
    sub.add_argument("--format", choices=["csv", "csv+svg"], default="csv+svg")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker threads (default: QBSIM_THREADS or 1)")
    sub.add_argument("--seed", type=int, default=None,
                     help="reserved; all computation is deterministic")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qbsim",
                                description="Two-spin Heisenberg quantum battery simulator")
    p.add_argument("--version", action="version", version=f"qbsim {__version__}")
    subs = p.add_subparsers(dest="command", required=True)

    f = subs.add_parser("figure", help="reproduce a preset figure panel")
    f.add_argument("--id", required=True, help="figure id, e.g. f2a")
    _add_common(f)
    f.set_defaults(fn=cmd_figure)

    m = subs.add_parser("metrics", help="evaluate all indicators at one parameter point")
    m.add_argument("--model", choices=sorted(_MODEL_PRESETS), default=None)
    m.add_argument("--J", dest="j", type=float, default=1.0)
    m.add_argument("--gamma", type=float, default=None)
    m.add_argument("--delta", type=float, default=None)
    m.add_argument("--Dz", dest="dz", type=float, default=0.0)
    m.add_argument("--Gz", dest="gz", type=float, default=0.0)
    m.add_argument("--B", dest="b", type=float, default=1.0)
    m.add_argument("--theta", type=float, default=0.0)
    m.add_argument("--T", dest="temperature", type=float, default=0.1)
    m.add_argument("--omega", type=float, default=1.0)
    m.add_argument("--axis", choices=["x", "y"], default="y")
    m.add_argument("--omega-t", dest="omega_t", type=float, default=math.pi / 2,
                   help="charging phase Omega*t")
    m.add_argument("--json", action="store_true")
    m.set_defaults(fn=cmd_metrics)

    s = subs.add_parser("sweep", help="run a sweep from a config file")
    s.add_argument("--config", required=True)
    _add_common(s)
    s.set_defaults(fn=cmd_sweep)

    pr = subs.add_parser("presets", help="list figure presets")
    pr.set_defaults(fn=cmd_presets)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except RegimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QbsimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
