"""Matplotlib renderings (PNG) for the report path of the command line."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .contour import Polyline  # noqa: E402

_RC = {
    "figure.figsize": (4.5, 4.5),
    "font.size": 9,
    "axes.linewidth": 0.6,
    "lines.linewidth": 1.1,
    "savefig.dpi": 150,
}


def _axes(window, title):
    fig, ax = plt.subplots()
    xmin, xmax, ymin, ymax = window
    ax.set_xlim(xmin, xmax)
    ax.set_ylim(ymin, ymax)
    ax.axhline(0, color="0.75", lw=0.5, zorder=0)
    ax.axvline(0, color="0.75", lw=0.5, zorder=0)
    ax.set_xlabel("$x$")
    ax.set_ylabel("$y$")
    if title:
        ax.set_title(title)
    return fig, ax


def locus_png(lines: list[Polyline], window: tuple, path, title: str = "", marks=()) -> Path:
    """Draw the traced locus, plus optional marked points, to a PNG file."""
    path = Path(path)
    with plt.rc_context(_RC):
        fig, ax = _axes(window, title)
        if (window[1] - window[0]) / (window[3] - window[2]) < 4:
            ax.set_aspect("equal", adjustable="box")
        for ln in lines:
            xs, ys = zip(*ln.points)
            ax.plot(xs, ys, color="C0")
        for x, y, label in marks:
            ax.plot([x], [y], "o", ms=3.5, color="C3")
            ax.annotate(label, (x, y), textcoords="offset points", xytext=(4, 4), fontsize=8)
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None})
        plt.close(fig)
    return path


def widths_png(rows: list[dict], path) -> Path:
    """Log-log plot of measured widths against the two power laws."""
    path = Path(path)
    cs = [r["c"] for r in rows]
    with plt.rc_context({**_RC, "figure.figsize": (5.0, 3.6)}):
        fig, ax = plt.subplots()
        ax.loglog(cs, [r["R_measured"] for r in rows], "o", ms=3, color="C0", label="$R_c$ measured")
        ax.loglog(cs, [r["R_predicted"] for r in rows], "-", color="C0", lw=0.8, label=r"$\sqrt{2}\,c^{3/2}$")
        ax.loglog(cs, [r["L_measured"] for r in rows], "s", ms=3, color="C1", label="$L_c$ measured")
        ax.loglog(
            cs, [r["L_predicted"] for r in rows], "-", color="C1", lw=0.8, label=r"$2\sqrt{2/3}\,c^{1/2}$"
        )
        ax.set_xlabel("$c$")
        ax.set_ylabel("width")
        ax.legend(frameon=False, fontsize=8)
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None})
        plt.close(fig)
    return path


def field_png(path, window=(-1.0, 1.0, -1.0, 1.0), n: int = 300, clip: float = 3.0) -> Path:
    """Heat map of Re(e^{1/z}) clipped to [-clip, clip]."""
    import numpy as np

    path = Path(path)
    xmin, xmax, ymin, ymax = window
    xs = np.linspace(xmin, xmax, n)
    ys = np.linspace(ymin, ymax, n)
    X, Y = np.meshgrid(xs, ys)
    R2 = X * X + Y * Y
    R2[R2 == 0] = math.nan
    with np.errstate(over="ignore", invalid="ignore"):
        re = np.exp(np.minimum(X / R2, 50.0)) * np.cos(Y / R2)
    with plt.rc_context(_RC):
        fig, ax = _axes(window, r"Re $e^{1/z}$")
        ax.imshow(np.clip(re, -clip, clip), extent=window, origin="lower", cmap="RdBu_r", interpolation="nearest")
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None})
        plt.close(fig)
    return path


__all__ = ["field_png", "locus_png", "widths_png"]
