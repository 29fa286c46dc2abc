"""Dependency-free SVG bar chart of relative MAE per model."""
from __future__ import annotations

from typing import Mapping, Union
from xml.sax.saxutils import escape

from .errors import EmptyReport
from .regress import EvalReport

WIDTH, HEIGHT = 640, 400
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 20, 50, 80
TITLE_FONT, LABEL_FONT, VALUE_FONT = 16, 12, 11
BAR_FILL = "#4c72b0"


def _num(x: float) -> str:
    text = f"{x:.4f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-0") else "0"


def render_chart(report: Union[EvalReport, Mapping], title: str = "MAE of regression models") -> str:
    """One bar per model in report order; bar height is linear in relative MAE."""
    if not isinstance(report, EvalReport):
        report = EvalReport.from_dict(report)
    if not report.models:
        raise EmptyReport("report has no model entries")
    values = [m.relative_mae_percent if m.relative_mae_percent is not None else 0.0 for m in report.models]
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    top = max(values)
    scale = plot_h / top if top > 0 else 0.0
    slot = plot_w / len(values)
    bar_w = slot * 0.6
    baseline = MARGIN_TOP + plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" style="background:#ffffff">',
        f'<text x="{WIDTH / 2:g}" y="{MARGIN_TOP / 2 + 6:g}" font-size="{TITLE_FONT}" text-anchor="middle">{escape(title)}</text>',
        f'<line x1="{MARGIN_LEFT}" y1="{baseline}" x2="{WIDTH - MARGIN_RIGHT}" y2="{baseline}" stroke="#000000"/>',
        f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{baseline}" stroke="#000000"/>',
        f'<text x="{MARGIN_LEFT / 2 - 10:g}" y="{MARGIN_TOP + plot_h / 2:g}" font-size="{LABEL_FONT}" '
        f'text-anchor="middle" transform="rotate(-90 {MARGIN_LEFT / 2 - 10:g} {MARGIN_TOP + plot_h / 2:g})">'
        f'Relative MAE (%)</text>',
        f'<text x="{MARGIN_LEFT + plot_w / 2:g}" y="{HEIGHT - 15}" font-size="{LABEL_FONT}" '
        f'text-anchor="middle">Model (lower is better)</text>',
    ]
    for i, (model, value) in enumerate(zip(report.models, values)):
        height = value * scale
        x = MARGIN_LEFT + i * slot + (slot - bar_w) / 2
        y = baseline - height
        cx = x + bar_w / 2
        shown = f"{value:.2f}" if model.relative_mae_percent is not None else "n/a"
        out.append(f'<rect class="bar" x="{_num(x)}" y="{_num(y)}" width="{_num(bar_w)}" '
                   f'height="{_num(height)}" fill="{BAR_FILL}"><title>{escape(model.kind)}</title></rect>')
        out.append(f'<text x="{_num(cx)}" y="{_num(y - 5)}" font-size="{VALUE_FONT}" '
                   f'text-anchor="middle">{shown}</text>')
        out.append(f'<text x="{_num(cx)}" y="{baseline + 18}" font-size="{LABEL_FONT}" '
                   f'text-anchor="middle">{escape(model.kind)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
