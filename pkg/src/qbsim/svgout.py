"""Minimal self-contained SVG rendering: heatmap cells and line plots."""

import numpy as np

# compact viridis-like ramp, interpolated linearly in RGB
_RAMP = [
    (68, 1, 84), (71, 44, 122), (59, 81, 139), (44, 113, 142), (33, 144, 141),
    (39, 173, 129), (92, 200, 99), (170, 220, 50), (253, 231, 37),
]


def _color(x):
    """Map x in [0,1] to a CSS rgb() string on the ramp."""
    x = min(max(float(x), 0.0), 1.0)
    pos = x * (len(_RAMP) - 1)
    i = min(int(pos), len(_RAMP) - 2)
    f = pos - i
    r, g, b = (round(a + f * (b_ - a)) for a, b_ in zip(_RAMP[i], _RAMP[i + 1]))
    return f"rgb({r},{g},{b})"


def _fmt(x):
    return f"{x:.6g}"


def heatmap_svg(x1, x2, values, title="", x_label="axis1", y_label="axis2",
                width=640, height=520):
    """Heatmap of values[i, k] over x1 (horizontal) and x2 (vertical)."""
    values = np.asarray(values, dtype=float)
    n1, n2 = values.shape
    lo, hi = float(values.min()), float(values.max())
    span = hi - lo if hi > lo else 1.0
    mx, my_top, my_bot = 70, 40, 50
    plot_w, plot_h = width - mx - 30, height - my_top - my_bot
    cw, ch = plot_w / n1, plot_h / n2
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" font-size="14">{title}</text>',
    ]
    for i in range(n1):
        for k in range(n2):
            c = _color((values[i, k] - lo) / span)
            px = mx + i * cw
            py = my_top + plot_h - (k + 1) * ch
            parts.append(
                f'<rect x="{px:.2f}" y="{py:.2f}" width="{cw + 0.5:.2f}" height="{ch + 0.5:.2f}" fill="{c}"/>'
            )
    parts += [
        f'<text x="{mx + plot_w / 2:.1f}" y="{height - 12}" text-anchor="middle" font-size="12">{x_label}</text>',
        f'<text x="18" y="{my_top + plot_h / 2:.1f}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 18 {my_top + plot_h / 2:.1f})">{y_label}</text>',
        f'<text x="{mx}" y="{height - 30}" font-size="11">{x_label}: [{_fmt(x1[0])}, {_fmt(x1[-1])}]'
        f'   {y_label}: [{_fmt(x2[0])}, {_fmt(x2[-1])}]   value: [{_fmt(lo)}, {_fmt(hi)}]</text>',
        "</svg>",
    ]
    return "\n".join(parts)


def line_svg(xs, ys, title="", x_label="x", y_label="value", width=640, height=420):
    """Polyline plot of a 1-D series."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    lo, hi = float(ys.min()), float(ys.max())
    span = hi - lo if hi > lo else 1.0
    x_lo, x_hi = float(xs[0]), float(xs[-1])
    x_span = x_hi - x_lo if x_hi > x_lo else 1.0
    mx, my_top, my_bot = 70, 40, 50
    plot_w, plot_h = width - mx - 30, height - my_top - my_bot
    pts = " ".join(
        f"{mx + (x - x_lo) / x_span * plot_w:.2f},{my_top + plot_h - (y - lo) / span * plot_h:.2f}"
        for x, y in zip(xs, ys)
    )
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<rect x="{mx}" y="{my_top}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#999"/>',
        f'<polyline points="{pts}" fill="none" stroke="rgb(44,113,142)" stroke-width="1.5"/>',
        f'<text x="{mx + plot_w / 2:.1f}" y="{height - 12}" text-anchor="middle" font-size="12">{x_label}</text>',
        f'<text x="18" y="{my_top + plot_h / 2:.1f}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 18 {my_top + plot_h / 2:.1f})">{y_label}</text>',
        f'<text x="{mx}" y="{height - 30}" font-size="11">x: [{_fmt(x_lo)}, {_fmt(x_hi)}]   '
        f'value: [{_fmt(lo)}, {_fmt(hi)}]</text>',
        "</svg>",
    ])
