"""Byte-deterministic SVG 1.1 output for traced loci."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .contour import Polyline

_HEADER = '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'


@dataclass(frozen=True)
class SvgStyle:
    width: int = 480
    height: int = 480
    stroke: str = "#1f3a93"
    stroke_width: float = 1.2
    axes: bool = True
    axis_stroke: str = "#999999"
    title: str = ""
    digits: int = 3


def _num(v: float, digits: int) -> str:
    s = f"{v:.{digits}f}"
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Frame:
    """Maps a data window onto a pixel box with y pointing up."""

    def __init__(self, window, ox, oy, w, h):
        self.xmin, self.xmax, self.ymin, self.ymax = window
        self.ox, self.oy, self.w, self.h = ox, oy, w, h

    def __call__(self, x, y):
        px = self.ox + (x - self.xmin) / (self.xmax - self.xmin) * self.w
        py = self.oy + (self.ymax - y) / (self.ymax - self.ymin) * self.h
        return px, py


def _panel(lines, window, frame: _Frame, style: SvgStyle) -> list[str]:
    d = style.digits
    out = []
    if style.axes:
        xmin, xmax, ymin, ymax = window
        if xmin <= 0 <= xmax:
            (x0, y0), (x1, y1) = frame(0, ymin), frame(0, ymax)
            out.append(
                f'<line x1="{_num(x0, d)}" y1="{_num(y0, d)}" x2="{_num(x1, d)}" y2="{_num(y1, d)}" '
                f'stroke="{style.axis_stroke}" stroke-width="0.5"/>'
            )
        if ymin <= 0 <= ymax:
            (x0, y0), (x1, y1) = frame(xmin, 0), frame(xmax, 0)
            out.append(
                f'<line x1="{_num(x0, d)}" y1="{_num(y0, d)}" x2="{_num(x1, d)}" y2="{_num(y1, d)}" '
                f'stroke="{style.axis_stroke}" stroke-width="0.5"/>'
            )
    for ln in lines:
        pts = [frame(x, y) for x, y in ln.points]
        cmds = [f"M{_num(pts[0][0], d)} {_num(pts[0][1], d)}"]
        cmds += [f"L{_num(x, d)} {_num(y, d)}" for x, y in pts[1:]]
        if ln.closed:
            cmds.append("Z")
        out.append(
            f'<path d="{" ".join(cmds)}" fill="none" stroke="{style.stroke}" '
            f'stroke-width="{_num(style.stroke_width, 2)}" stroke-linejoin="round"/>'
        )
    return out


def emit_svg(lines: list[Polyline], window: tuple, style: SvgStyle = SvgStyle()) -> str:
    """One SVG document with one path per polyline."""
    w, h = style.width, style.height
    body = [
        _HEADER.rstrip("\n"),
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
    ]
    if style.title:
        body.append(f"<title>{escape(style.title)}</title>")
    body.append(f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>')
    body += _panel(lines, window, _Frame(window, 0, 0, w, h), style)
    body.append("</svg>")
    return "\n".join(body) + "\n"


def emit_atlas(panels: list[tuple[str, tuple, list[Polyline]]], columns: int, style: SvgStyle = SvgStyle()) -> str:
    """A grid of labelled panels, one per (label, window, polylines)."""
    cw, ch, pad = style.width, style.height, 18
    rows = (len(panels) + columns - 1) // columns
    W, H = columns * cw, rows * (ch + pad)
    body = [
        _HEADER.rstrip("\n"),
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
    ]
    if style.title:
        body.append(f"<title>{escape(style.title)}</title>")
    body.append(f'<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>')
    for n, (label, window, lines) in enumerate(panels):
        r, c = divmod(n, columns)
        ox, oy = c * cw, r * (ch + pad)
        body.append(f'<g id="{escape(label)}">')
        body.append(
            f'<text x="{ox + 4}" y="{oy + 13}" font-family="sans-serif" font-size="12">{escape(label)}</text>'
        )
        body.append(
            f'<rect x="{ox + 1}" y="{oy + pad}" width="{cw - 2}" height="{ch - 2}" fill="none" stroke="#dddddd"/>'
        )
        body += _panel(lines, window, _Frame(window, ox, oy + pad, cw, ch), style)
        body.append("</g>")
    body.append("</svg>")
    return "\n".join(body) + "\n"


__all__ = ["SvgStyle", "emit_atlas", "emit_svg"]
