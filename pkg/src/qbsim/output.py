"""Deterministic CSV emission, run manifests, and SVG file output."""

import json
import time
from pathlib import Path

from ._version import __version__
from .svgout import heatmap_svg, line_svg


def _num(x) -> str:
    # 17 significant digits round-trips any double exactly
    return f"{x:.16e}"


def _flatten_meta(meta, prefix=""):
    items = []
    for key in sorted(meta):
        val = meta[key]
        if isinstance(val, dict):
            items.extend(_flatten_meta(val, prefix=f"{prefix}{key}."))
        elif val is None:
            items.append((f"{prefix}{key}", "none"))
        elif isinstance(val, (list, tuple)):
            items.append((f"{prefix}{key}", ";".join(str(v) for v in val)))
        else:
            items.append((f"{prefix}{key}", str(val)))
    return items


def write_sweep_csv(path, result) -> Path:
    """CSV body: '# key=value' parameter snapshot, then axis1,axis2,value rows.

    Fixed 17-significant-digit scientific notation and LF endings keep the
    body byte-identical across runs and thread counts.
    """
    path = Path(path)
    lines = [f"# {k}={v}" for k, v in _flatten_meta(result.metadata)]
    lines.append("axis1,axis2,value")
    x1 = result.axis1_values
    x2 = result.axis2_values
    vals = result.values
    if x2 is None:
        for i, x in enumerate(x1):
            lines.append(f"{_num(x)},,{_num(vals[i, 0])}")
    else:
        for i, xa in enumerate(x1):
            for k, xb in enumerate(x2):
                lines.append(f"{_num(xa)},{_num(xb)},{_num(vals[i, k])}")
    path.write_text("\n".join(lines) + "\n", newline="\n")
    return path


def write_sweep_svg(path, result, title="") -> Path:
    path = Path(path)
    meta = result.metadata
    x_label = meta.get("axis1", {}).get("name", "axis1")
    if result.axis2_values is None:
        svg = line_svg(result.axis1_values, result.values[:, 0], title=title,
                       x_label=x_label, y_label=meta.get("metric", "value"))
    else:
        y_label = meta.get("axis2", {}).get("name", "axis2")
        svg = heatmap_svg(result.axis1_values, result.axis2_values, result.values,
                          title=title, x_label=x_label, y_label=y_label)
    path.write_text(svg, newline="\n")
    return path


def write_manifest(path, command, config_snapshot, outputs, wall_time_s) -> Path:
    """Run manifest: command line, config snapshot, outputs, version, wall time."""
    path = Path(path)
    doc = {
        "command": command,
        "config": config_snapshot,
        "outputs": [str(o) for o in outputs],
        "tool_version": __version__,
        "wall_time_s": round(wall_time_s, 6),
        "written_at": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    }
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", newline="\n")
    return path
