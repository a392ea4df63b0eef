"""Dependency-free SVG charts: bars, grouped bars and per-document lines.

Bars carry ``data-series``, ``data-category`` and ``data-value`` attributes
so the numbers can be read back from the markup.
"""

from __future__ import annotations

PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#ff9da7", "#9c755f")


def _esc(text) -> str:
    return (
        str(text)
        .replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _open(width, height, title):
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" role="img" aria-label="{_esc(title)}">',
        f"<title>{_esc(title)}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" font-size="14" font-family="sans-serif">{_esc(title)}</text>',
    ]


def _axis(pad_l, pad_t, plot_w, plot_h, vmax, ticks=5, label="proportion"):
    parts = [
        f'<line x1="{pad_l}" y1="{pad_t}" x2="{pad_l}" y2="{pad_t + plot_h}" stroke="#333"/>',
        f'<line x1="{pad_l}" y1="{pad_t + plot_h}" x2="{pad_l + plot_w}" y2="{pad_t + plot_h}" stroke="#333"/>',
    ]
    for i in range(ticks + 1):
        v = vmax * i / ticks
        y = pad_t + plot_h - plot_h * i / ticks
        parts.append(f'<line x1="{pad_l - 4}" y1="{y:.3f}" x2="{pad_l}" y2="{y:.3f}" stroke="#333"/>')
        parts.append(
            f'<text x="{pad_l - 6}" y="{y + 3:.3f}" text-anchor="end" font-size="9" font-family="sans-serif">{v:.3g}</text>'
        )
    parts.append(
        f'<text transform="translate(12,{pad_t + plot_h / 2:.1f}) rotate(-90)" text-anchor="middle" '
        f'font-size="10" font-family="sans-serif">{_esc(label)}</text>'
    )
    return parts


def grouped_bar_chart(
    title: str,
    categories: list[str],
    series: dict[str, list[float]],
    width: int = 760,
    height: int = 400,
    y_label: str = "proportion",
) -> str:
    """Bars grouped by category, one bar per series; heights share one scale.

    A single series gives an ordinary bar chart.
    """
    pad_l, pad_r, pad_t, pad_b = 56, 16, 36, 70
    plot_w, plot_h = width - pad_l - pad_r, height - pad_t - pad_b
    names = list(series)
    vmax = max((v for vals in series.values() for v in vals), default=0.0)
    scale = plot_h / vmax if vmax > 0 else 0.0
    n_cat = max(len(categories), 1)
    group_w = plot_w / n_cat
    bar_w = group_w * 0.8 / max(len(names), 1)
    out = _open(width, height, title) + _axis(pad_l, pad_t, plot_w, plot_h, vmax, label=y_label)
    for ci, cat in enumerate(categories):
        x0 = pad_l + ci * group_w + group_w * 0.1
        for si, name in enumerate(names):
            v = float(series[name][ci])
            h = v * scale
            x = x0 + si * bar_w
            y = pad_t + plot_h - h
            out.append(
                f'<rect x="{x:.3f}" y="{y:.3f}" width="{bar_w:.3f}" height="{h:.4f}" '
                f'fill="{PALETTE[si % len(PALETTE)]}" data-series="{_esc(name)}" '
                f'data-category="{_esc(cat)}" data-value="{v!r}"/>'
            )
        cx = pad_l + (ci + 0.5) * group_w
        cy = pad_t + plot_h + 12
        out.append(
            f'<text x="{cx:.3f}" y="{cy:.3f}" text-anchor="end" font-size="10" font-family="sans-serif" '
            f'transform="rotate(-35 {cx:.3f} {cy:.3f})">{_esc(cat)}</text>'
        )
    if len(names) > 1:
        out.extend(_legend(names, pad_l + plot_w - 130, pad_t + 4))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _legend(names, x, y):
    parts = []
    for i, name in enumerate(names):
        yy = y + i * 16
        parts.append(f'<rect x="{x}" y="{yy}" width="10" height="10" fill="{PALETTE[i % len(PALETTE)]}"/>')
        parts.append(
            f'<text x="{x + 14}" y="{yy + 9}" font-size="10" font-family="sans-serif">{_esc(name)}</text>'
        )
    return parts


def line_chart(
    title: str,
    x_labels: list[str],
    series: dict[str, list[float]],
    width: int = 860,
    height: int = 420,
    y_label: str = "proportion",
) -> str:
    """One polyline per series over a shared categorical x axis."""
    pad_l, pad_r, pad_t, pad_b = 56, 120, 36, 80
    plot_w, plot_h = width - pad_l - pad_r, height - pad_t - pad_b
    vmax = max((v for vals in series.values() for v in vals), default=0.0)
    scale = plot_h / vmax if vmax > 0 else 0.0
    n = len(x_labels)
    step = plot_w / (n - 1) if n > 1 else 0.0
    xs = [pad_l + (i * step if n > 1 else plot_w / 2) for i in range(n)]
    out = _open(width, height, title) + _axis(pad_l, pad_t, plot_w, plot_h, vmax, label=y_label)
    for si, (name, vals) in enumerate(series.items()):
        color = PALETTE[si % len(PALETTE)]
        pts = " ".join(f"{x:.3f},{pad_t + plot_h - float(v) * scale:.3f}" for x, v in zip(xs, vals))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5" data-series="{_esc(name)}"/>')
    for x, lab in zip(xs, x_labels):
        cy = pad_t + plot_h + 12
        out.append(
            f'<text x="{x:.3f}" y="{cy:.3f}" text-anchor="end" font-size="9" font-family="sans-serif" '
            f'transform="rotate(-45 {x:.3f} {cy:.3f})">{_esc(lab)}</text>'
        )
    out.extend(_legend(list(series), pad_l + plot_w + 12, pad_t + 4))
    out.append("</svg>")
    return "\n".join(out) + "\n"
