"""Deterministic SVG/HTML rendering of profile curves.

The x axis follows the curve domain: in linear mode it is split into a focus
region [tau_min, tau_max] at 70% of the plot width and, when ratios beyond
tau_max exist, a compressed tail region (tau_max, max_ratio] at the
remaining 30%. Logarithmic mode uses a single log10 region from tau_min to
the largest finite ratio.

Output is byte-deterministic: same ProfileSet and config, same document.
Numbers are written with 6 significant digits and no ids, timestamps or
randomness are emitted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import log10
from typing import Iterable

from .engine import AnalysisConfig, ProfileSet

XMLNS = "http://www.w3.org/2000/svg"

# Fixed qualitative palette, cycled when a dataset has more than 10 solvers.
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)

FOCUS_WIDTH_SHARE = 0.7
FOCUS_TICKS = 5


class RenderError(ValueError):
    """Raised when a ProfileSet cannot be plotted (e.g. over-filtered to nothing)."""


def fmt(value: float) -> str:
    """Stable 6-significant-digit number formatting."""
    if value == 0:
        return "0"
    return format(float(value), ".6g")


def esc(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


@dataclass(frozen=True)
class AxisRegion:
    t_lo: float
    t_hi: float
    x_lo: float
    x_hi: float
    log: bool

    def x(self, tau: float) -> float:
        tau = min(max(tau, self.t_lo), self.t_hi)
        if self.log:
            span = log10(self.t_hi) - log10(self.t_lo)
            frac = (log10(tau) - log10(self.t_lo)) / span
        else:
            frac = (tau - self.t_lo) / (self.t_hi - self.t_lo)
        return self.x_lo + frac * (self.x_hi - self.x_lo)

    def inverse(self, x: float) -> float:
        frac = (x - self.x_lo) / (self.x_hi - self.x_lo)
        if self.log:
            return 10 ** (log10(self.t_lo) + frac * (log10(self.t_hi) - log10(self.t_lo)))
        return self.t_lo + frac * (self.t_hi - self.t_lo)


@dataclass(frozen=True)
class PlotSpec:
    """Resolved plot geometry: axis regions, palette assignment, margins."""

    width: int
    height: int
    x_regions: tuple[AxisRegion, ...]
    palette: tuple[tuple[str, str], ...]  # (solver name, color) in solver order
    legend_title: str
    plot_left: float
    plot_right: float
    plot_top: float
    plot_bottom: float

    @property
    def tau_start(self) -> float:
        return self.x_regions[0].t_lo

    @property
    def tau_end(self) -> float:
        return self.x_regions[-1].t_hi

    def x_to_px(self, tau: float) -> float:
        for region in self.x_regions[:-1]:
            if tau <= region.t_hi:
                return region.x(tau)
        return self.x_regions[-1].x(tau)

    def px_to_x(self, px: float) -> float:
        for region in self.x_regions[:-1]:
            if px <= region.x_hi:
                return region.inverse(px)
        return self.x_regions[-1].inverse(px)

    def f_to_px(self, f: float) -> float:
        return self.plot_bottom - f * (self.plot_bottom - self.plot_top)

    def px_to_f(self, px: float) -> float:
        return (self.plot_bottom - px) / (self.plot_bottom - self.plot_top)


def plan_plot(
    profiles: ProfileSet,
    config: AnalysisConfig,
    metric_name: str = "",
    width: int = 800,
    height: int = 500,
) -> PlotSpec:
    """Resolve axis regions and palette for a ProfileSet."""
    if not profiles.curves or profiles.denominator == 0:
        raise RenderError("nothing to plot: no instances survive the configured filters")

    left, right_gap, legend_w = 55.0, 12.0, 170.0
    top, bottom = 24.0, 44.0
    plot_left = left
    plot_right = width - legend_w - right_gap
    plot_top = top
    plot_bottom = height - bottom

    gmax = profiles.max_ratio
    if config.x_scale == "logarithmic":
        t_hi = gmax if gmax > config.tau_min else config.tau_min * 10
        regions = (AxisRegion(config.tau_min, t_hi, plot_left, plot_right, log=True),)
    elif gmax > config.tau_max:
        split = plot_left + FOCUS_WIDTH_SHARE * (plot_right - plot_left)
        regions = (
            AxisRegion(config.tau_min, config.tau_max, plot_left, split, log=False),
            AxisRegion(config.tau_max, gmax, split, plot_right, log=False),
        )
    else:
        regions = (AxisRegion(config.tau_min, config.tau_max, plot_left, plot_right, log=False),)

    palette = tuple(
        (name, PALETTE[i % len(PALETTE)]) for i, name in enumerate(profiles.curves)
    )
    return PlotSpec(
        width=width,
        height=height,
        x_regions=regions,
        palette=palette,
        legend_title=metric_name,
        plot_left=plot_left,
        plot_right=plot_right,
        plot_top=plot_top,
        plot_bottom=plot_bottom,
    )


def _x_ticks(spec: PlotSpec) -> list[float]:
    focus = spec.x_regions[0]
    if focus.log:
        lo, hi = log10(focus.t_lo), log10(focus.t_hi)
        ticks = [10 ** (lo + i * (hi - lo) / (FOCUS_TICKS - 1)) for i in range(FOCUS_TICKS)]
    else:
        lo, hi = focus.t_lo, focus.t_hi
        ticks = [lo + i * (hi - lo) / (FOCUS_TICKS - 1) for i in range(FOCUS_TICKS)]
    if len(spec.x_regions) == 2:
        ticks.append(spec.x_regions[1].t_hi)  # tail region: endpoint only
    return ticks


def _curve_points(spec: PlotSpec, taus: Iterable[float], values: Iterable[float]) -> list[tuple[float, float]]:
    t_start, t_end = spec.tau_start, spec.tau_end
    current = 0.0
    for tau, value in zip(taus, values):
        if tau <= t_start:
            current = value  # steps at or before the left edge are already counted
    points = [(spec.x_to_px(t_start), spec.f_to_px(current))]
    for tau, value in zip(taus, values):
        if tau <= t_start or tau > t_end:
            continue
        x = spec.x_to_px(tau)
        points.append((x, spec.f_to_px(current)))
        points.append((x, spec.f_to_px(value)))
        current = value
    points.append((spec.x_to_px(t_end), spec.f_to_px(current)))
    deduped = [points[0]]
    for point in points[1:]:
        if point != deduped[-1]:
            deduped.append(point)
    return deduped


def render_svg(
    profiles: ProfileSet,
    config: AnalysisConfig,
    metric_name: str = "",
    width: int = 800,
    height: int = 500,
) -> bytes:
    """Render profile curves as a standalone SVG 1.1 document."""
    spec = plan_plot(profiles, config, metric_name, width, height)
    out: list[str] = []
    out.append(
        f'<svg xmlns="{XMLNS}" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    out.append(f"<title>{esc(metric_name)}</title>")
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>')

    # Horizontal gridlines and y ticks at 0, 0.2, ... 1.0.
    for i in range(6):
        f = i / 5
        y = spec.f_to_px(f)
        if i > 0:
            out.append(
                f'<line x1="{fmt(spec.plot_left)}" y1="{fmt(y)}" '
                f'x2="{fmt(spec.plot_right)}" y2="{fmt(y)}" stroke="#dddddd" stroke-width="1"/>'
            )
        out.append(
            f'<line x1="{fmt(spec.plot_left - 5)}" y1="{fmt(y)}" '
            f'x2="{fmt(spec.plot_left)}" y2="{fmt(y)}" stroke="#333333" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{fmt(spec.plot_left - 9)}" y="{fmt(y + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="12" fill="#333333">{fmt(f)}</text>'
        )

    # X ticks: evenly spaced over the focus region, endpoint only beyond it.
    for tau in _x_ticks(spec):
        x = spec.x_to_px(tau)
        out.append(
            f'<line x1="{fmt(x)}" y1="{fmt(spec.plot_bottom)}" '
            f'x2="{fmt(x)}" y2="{fmt(spec.plot_bottom + 5)}" stroke="#333333" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{fmt(x)}" y="{fmt(spec.plot_bottom + 19)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" fill="#333333">{fmt(tau)}</text>'
        )

    # Region divider between the focus and tail views.
    if len(spec.x_regions) == 2:
        x = spec.x_regions[1].x_lo
        out.append(
            f'<line x1="{fmt(x)}" y1="{fmt(spec.plot_top)}" x2="{fmt(x)}" y2="{fmt(spec.plot_bottom)}" '
            f'stroke="#888888" stroke-width="1" stroke-dasharray="4,3"/>'
        )

    # Axes.
    out.append(
        f'<line x1="{fmt(spec.plot_left)}" y1="{fmt(spec.plot_top)}" '
        f'x2="{fmt(spec.plot_left)}" y2="{fmt(spec.plot_bottom)}" stroke="#333333" stroke-width="1"/>'
    )
    out.append(
        f'<line x1="{fmt(spec.plot_left)}" y1="{fmt(spec.plot_bottom)}" '
        f'x2="{fmt(spec.plot_right)}" y2="{fmt(spec.plot_bottom)}" stroke="#333333" stroke-width="1"/>'
    )
    out.append(
        f'<text x="{fmt((spec.plot_left + spec.plot_right) / 2)}" y="{fmt(spec.plot_bottom + 36)}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="13" fill="#333333">'
        f"performance ratio</text>"
    )
    out.append(
        f'<text x="14" y="{fmt((spec.plot_top + spec.plot_bottom) / 2)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" fill="#333333" '
        f'transform="rotate(-90 14 {fmt((spec.plot_top + spec.plot_bottom) / 2)})">'
        f"fraction of instances</text>"
    )

    # One right-continuous step polyline per solver, palette by solver order.
    for name, color in spec.palette:
        curve = profiles.curves[name]
        points = _curve_points(spec, curve.taus.tolist(), curve.values.tolist())
        coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)
        out.append(
            f'<polyline class="curve" fill="none" stroke="{color}" stroke-width="2" '
            f'points="{coords}"/>'
        )

    # Legend: metric name as title, then one swatch + name per solver.
    lx = spec.plot_right + 24
    ly = spec.plot_top + 8
    out.append(
        f'<text x="{fmt(lx)}" y="{fmt(ly)}" font-family="sans-serif" font-size="13" '
        f'font-weight="bold" fill="#333333">{esc(metric_name)}</text>'
    )
    for i, (name, color) in enumerate(spec.palette):
        y = ly + 20 + i * 20
        out.append(
            f'<line x1="{fmt(lx)}" y1="{fmt(y - 4)}" x2="{fmt(lx + 22)}" y2="{fmt(y - 4)}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{fmt(lx + 28)}" y="{fmt(y)}" font-family="sans-serif" font-size="12" '
            f'fill="#333333">{esc(name)}</text>'
        )

    out.append("</svg>")
    return "\n".join(out).encode("utf-8")


_SVG_TITLE = re.compile(rb"<title>(.*?)</title>", re.DOTALL)


def render_html(svg: bytes, title: str = "") -> bytes:
    """Wrap a rendered SVG in a minimal standalone HTML5 page.

    With no title given, the SVG's own title (the metric name) is used.
    The page embeds the SVG verbatim and references no external resources.
    """
    if not title:
        match = _SVG_TITLE.search(svg)
        if match:
            title = match.group(1).decode("utf-8")  # already XML-escaped
        else:
            title = "performance profiles"
    else:
        title = esc(title)
    document = (
        "<!DOCTYPE html>\n"
        '<html lang="en">\n'
        "<head>\n"
        '<meta charset="utf-8">\n'
        '<meta name="viewport" content="width=device-width, initial-scale=1">\n'
        f"<title>{title}</title>\n"
        "<style>body{margin:2rem;display:flex;justify-content:center}</style>\n"
        "</head>\n"
        "<body>\n"
        f"{svg.decode('utf-8')}\n"
        "</body>\n"
        "</html>\n"
    )
    return document.encode("utf-8")
