"""Marching-squares tracing of real zero sets F(x, y) = 0."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..arith import BivariatePolynomial

# windows (xmin, xmax, ymin, ymax) chosen to frame each curve's features
DEFAULT_WINDOWS = {
    "C02": (-1.0, 1.0, -1.0, 1.0),
    "C03": (-1.2, 0.6, -0.9, 0.9),
    "G3": (-3.0, 1.0, -2.0, 2.0),
    "Q": (-7.0, 2.0, -12.0, 12.0),
    "E": (-12.0, 16.0, -60.0, 60.0),
}
GENERIC_WINDOW = (-1.5, 1.0, -1.25, 1.25)
REFINE = 4


def default_window(name: str) -> tuple:
    return DEFAULT_WINDOWS.get(name, GENERIC_WINDOW)


@dataclass(frozen=True)
class PlotSpec:
    polynomial: BivariatePolynomial
    window: tuple = GENERIC_WINDOW
    resolution: int = 200
    refine_origin: bool = True

    def __post_init__(self):
        xmin, xmax, ymin, ymax = (float(v) for v in self.window)
        if not (xmin < xmax and ymin < ymax):
            raise ValueError(f"empty window {self.window}")
        if self.resolution < 16:
            raise ValueError("resolution must be at least 16")
        object.__setattr__(self, "window", (xmin, xmax, ymin, ymax))

    @property
    def cell(self) -> tuple[float, float]:
        xmin, xmax, ymin, ymax = self.window
        n = self.resolution
        return (xmax - xmin) / n, (ymax - ymin) / n


@dataclass
class Polyline:
    points: list
    cell: tuple = (0.0, 0.0)  # cell size (hx, hy) of the grid that produced it
    closed: bool = False

    def __len__(self):
        return len(self.points)


@dataclass
class FloatPoly:
    """F as coefficient rows in y, evaluated by Horner in y.

    Each coefficient c_j(x) = sum_i a_ij x^i is summed with math.fsum.
    """

    rows: dict = field(default_factory=dict)
    ydeg: int = 0

    @classmethod
    def from_poly(cls, F: BivariatePolynomial) -> "FloatPoly":
        if F.domain != "QQ":
            raise ValueError("real loci need rational coefficients")
        rows: dict[int, list] = {}
        for (i, j), a in F.terms.items():
            rows.setdefault(j, []).append((i, float(Fraction(a))))
        return cls(rows, max(rows, default=0))

    def coeffs(self, x: float) -> list[float]:
        return [math.fsum(a * x**i for i, a in self.rows.get(j, ())) for j in range(self.ydeg + 1)]

    def grid(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Values on the grid, indexed [iy, ix]."""
        out = np.empty((len(ys), len(xs)))
        for k, x in enumerate(xs):
            cs = self.coeffs(float(x))
            acc = np.zeros_like(ys, dtype=float)
            for c in reversed(cs):
                acc = acc * ys + c
            out[:, k] = acc
        return out

    def __call__(self, x: float, y: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs(x)):
            acc = acc * y + c
        return acc


# edges of a cell by corner pairs: corners 0=(i,j) 1=(i+1,j) 2=(i+1,j+1) 3=(i,j+1)
_EDGES = ((0, 1), (1, 2), (2, 3), (3, 0))


def _edge_key(tag, i, j, e):
    # canonical id shared by neighbouring cells
    if e == 0:
        return (tag, "h", i, j)
    if e == 2:
        return (tag, "h", i, j + 1)
    if e == 3:
        return (tag, "v", i, j)
    return (tag, "v", i + 1, j)


def _segments(xs, ys, V, tag, skip=None):
    """Marching-squares segments as pairs of ((key, point), (key, point))."""
    segs = []
    nx, ny = len(xs) - 1, len(ys) - 1
    pos = V >= 0
    for j in range(ny):
        for i in range(nx):
            if skip is not None and skip(i, j):
                continue
            corners = ((i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1))
            s = [pos[cj, ci] for ci, cj in corners]
            if all(s) or not any(s):
                continue
            cross = []
            for e, (p, q) in enumerate(_EDGES):
                if s[p] == s[q]:
                    continue
                (pi, pj), (qi, qj) = corners[p], corners[q]
                fp, fq = V[pj, pi], V[qj, qi]
                t = fp / (fp - fq) if fp != fq else 0.5
                pt = (xs[pi] + t * (xs[qi] - xs[pi]), ys[pj] + t * (ys[qj] - ys[pj]))
                cross.append((e, (_edge_key(tag, i, j, e), (float(pt[0]), float(pt[1])))))
            if len(cross) == 2:
                segs.append((cross[0][1], cross[1][1]))
            else:
                # saddle: decide the pairing from the centre value
                centre = sum(V[cj, ci] for ci, cj in corners) / 4
                by_edge = dict(cross)
                if (centre >= 0) == s[0]:
                    pairs = ((0, 1), (2, 3))
                else:
                    pairs = ((3, 0), (1, 2))
                for a, b in pairs:
                    segs.append((by_edge[a], by_edge[b]))
    return segs


def _stitch(segs, cell) -> list[Polyline]:
    """Join segments that share an edge key into maximal polylines."""
    adj: dict = {}
    pts: dict = {}
    for n, (a, b) in enumerate(segs):
        for k, p in (a, b):
            adj.setdefault(k, []).append(n)
            pts[k] = p
    used = [False] * len(segs)
    lines = []
    for n in range(len(segs)):
        if used[n]:
            continue
        used[n] = True
        a, b = segs[n]
        chain = [a[0], b[0]]
        for forward in (True, False):
            while True:
                end = chain[-1] if forward else chain[0]
                nxt = next((m for m in adj[end] if not used[m]), None)
                if nxt is None:
                    break
                used[nxt] = True
                u, v = segs[nxt]
                other = v[0] if u[0] == end else u[0]
                if forward:
                    chain.append(other)
                else:
                    chain.insert(0, other)
        closed = len(chain) > 2 and chain[0] == chain[-1]
        lines.append(Polyline([pts[k] for k in chain], cell, closed))
    return lines


def _around(t: float, k: int, n: int) -> tuple[int, int]:
    """Cell index range of half-width k around grid coordinate t, centred when
    t falls on a grid line so that symmetric windows stay symmetric."""
    r = round(t)
    if abs(t - r) < 1e-9:
        lo, hi = r - k, r + k - 1
    else:
        lo, hi = math.floor(t) - k, math.floor(t) + k
    return max(lo, 0), min(hi, n - 1)


def trace_real_locus(spec: PlotSpec) -> list[Polyline]:
    """Polylines approximating F = 0 inside the window.

    A block of coarse cells around the origin (``max(1, resolution // 40)``
    cells on each side) is redone on a grid 4 times finer so the singular
    point at the origin keeps its shape.
    """
    xmin, xmax, ymin, ymax = spec.window
    n = spec.resolution
    f = FloatPoly.from_poly(spec.polynomial)
    xs = np.linspace(xmin, xmax, n + 1)
    ys = np.linspace(ymin, ymax, n + 1)
    V = f.grid(xs, ys)
    hx, hy = spec.cell
    block = None
    if spec.refine_origin and xmin < 0 <= xmax and ymin < 0 <= ymax:
        k = max(1, n // 40)
        block = (*_around(-xmin / hx, k, n), *_around(-ymin / hy, k, n))
    skip = None
    if block:
        ia, ib, ja, jb = block
        skip = lambda i, j: ia <= i <= ib and ja <= j <= jb  # noqa: E731
    lines = _stitch(_segments(xs, ys, V, "c", skip), (hx, hy))
    if block:
        ia, ib, ja, jb = block
        fx = np.linspace(xs[ia], xs[ib + 1], (ib - ia + 1) * REFINE + 1)
        fy = np.linspace(ys[ja], ys[jb + 1], (jb - ja + 1) * REFINE + 1)
        lines += _stitch(_segments(fx, fy, f.grid(fx, fy), "f"), (hx / REFINE, hy / REFINE))
    return [ln for ln in lines if len(ln) >= 2]


def vertices(lines: list[Polyline]) -> list[tuple[float, float]]:
    return [p for ln in lines for p in ln.points]


def hausdorff(A: list, B: list) -> float:
    """Symmetric Hausdorff distance between two finite point sets."""
    if not A or not B:
        return math.inf if (A or B) else 0.0
    a, b = np.asarray(A), np.asarray(B)

    def one_side(P, Q):
        worst = 0.0
        for chunk in np.array_split(P, max(1, len(P) // 2000)):
            d = np.sqrt(((chunk[:, None, :] - Q[None, :, :]) ** 2).sum(-1)).min(1)
            worst = max(worst, float(d.max()))
        return worst

    return max(one_side(a, b), one_side(b, a))


def distance_to(lines: list[Polyline], point) -> float:
    vs = vertices(lines)
    if not vs:
        return math.inf
    return min(math.hypot(x - point[0], y - point[1]) for x, y in vs)


__all__ = [
    "DEFAULT_WINDOWS",
    "GENERIC_WINDOW",
    "FloatPoly",
    "PlotSpec",
    "Polyline",
    "REFINE",
    "default_window",
    "distance_to",
    "hausdorff",
    "trace_real_locus",
    "vertices",
]
