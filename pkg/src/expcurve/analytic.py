"""Floating-point checks of the analytic picture: e^{1/z}, its level circles,
the inflection locus F_2(c, y) = 0 and the widths of its central root pair."""

from __future__ import annotations

import csv
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath

from .arith import BivariatePolynomial, UPoly
from .arith.algorithms import gcd_field

NEAR_ORIGIN = 1e-3
_EXP_MAX = math.log(1.7976931348623157e308)
SQRT_3_4 = math.sqrt(0.75)


class EssentialSingularityError(ValueError):
    pass


# -- the field e^{1/z} ------------------------------------------------------------


@dataclass(frozen=True)
class FieldSample:
    x: float
    y: float
    re: float
    im: float
    abs: float
    log_abs: float
    saturated: bool = False


def _saturated(x, y, u, v) -> FieldSample:
    inf = math.inf
    c, s = math.cos(v), -math.sin(v)
    re = math.copysign(inf, c) if c else 0.0
    im = math.copysign(inf, s) if s else 0.0
    return FieldSample(x, y, re, im, inf, u, True)


def eval_field(x: float, y: float) -> FieldSample:
    """e^{1/z} at z = x + iy, using 1/z = (x - iy)/(x^2 + y^2).

    Points with |z| < 1e-3 go through mpmath; an exponent beyond the double
    range yields a sample flagged ``saturated`` with infinite magnitude.
    """
    x, y = float(x), float(y)
    if x == 0.0 and y == 0.0:
        raise EssentialSingularityError("e^{1/z} has an essential singularity at z = 0")
    if math.hypot(x, y) < NEAR_ORIGIN:
        with mpmath.workdps(40):
            r2 = mpmath.mpf(x) ** 2 + mpmath.mpf(y) ** 2
            u, v = mpmath.mpf(x) / r2, mpmath.mpf(y) / r2
            vr = float(mpmath.fmod(v, 2 * mpmath.pi))
            if u > _EXP_MAX:
                return _saturated(x, y, float(u), vr)
            m = mpmath.exp(u)
            return FieldSample(x, y, float(m * mpmath.cos(v)), float(-m * mpmath.sin(v)), float(m), float(u))
    r2 = x * x + y * y
    u, v = x / r2, y / r2
    if u > _EXP_MAX:
        return _saturated(x, y, u, v)
    m = math.exp(u)
    return FieldSample(x, y, m * math.cos(v), -m * math.sin(v), m, u)


def reference_field(x: float, y: float, dps: int = 60) -> tuple:
    """(re, im, abs) of e^{1/z} evaluated with mpmath at ``dps`` digits."""
    with mpmath.workdps(dps):
        w = mpmath.exp(1 / mpmath.mpc(x, y))
        return float(w.real), float(w.imag), float(abs(w))


def level_circle(r: float, samples: int = 16) -> list[FieldSample]:
    """Samples of e^{1/z} on the circle (x - r)^2 + y^2 = r^2, away from 0.

    On that circle x/(x^2 + y^2) = 1/(2r), so |e^{1/z}| = e^{1/(2r)}.
    """
    out = []
    for k in range(samples):
        th = math.pi * (2 * k + 1) / samples
        out.append(eval_field(r + r * math.cos(th), r * math.sin(th)))
    return out


# -- exact real roots ---------------------------------------------------------------


def _specialize(F: BivariatePolynomial, c) -> UPoly:
    """F(c, y) as a univariate polynomial in y with rational coefficients."""
    c = Fraction(c)
    coeffs: dict[int, Fraction] = {}
    for (i, j), a in F.terms.items():
        coeffs[j] = coeffs.get(j, Fraction(0)) + Fraction(a) * c**i
    n = max(coeffs, default=0)
    return UPoly([coeffs.get(k, 0) for k in range(n + 1)])


def _sturm(p: UPoly) -> list[UPoly]:
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return seq


def _variations(seq: list[UPoly], t: Fraction) -> int:
    signs = [s for s in (q(t) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _cauchy_bound(p: UPoly) -> Fraction:
    lc = abs(Fraction(p.lc()))
    return 1 + max((abs(Fraction(a)) / lc for a in p.c[:-1]), default=Fraction(0))


def isolate_real_roots(p: UPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], each holding exactly one distinct real root."""
    if p.degree < 1:
        return []
    sq = p.exquo(gcd_field(p, p.derivative()))
    seq = _sturm(sq)
    B = _cauchy_bound(sq)
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = _variations(seq, lo) - _variations(seq, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack += [(lo, mid), (mid, hi)]
    return sorted(out)


def bisect_root(p: UPoly, lo: Fraction, hi: Fraction, rel_tol: float = 1e-17) -> float:
    """Shrink an isolating interval (lo, hi] of a real root by exact-sign bisection.

    Signs are compared with the one at ``hi`` on the squarefree part, so a
    root sitting at the excluded endpoint ``lo`` does no harm.
    """
    if p(hi) == 0:
        return float(hi)
    p = p.exquo(gcd_field(p, p.derivative()))
    hi_pos = p(hi) > 0
    for _ in range(400):
        mid = (lo + hi) / 2
        fm = p(mid)
        if fm == 0:
            return float(mid)
        if (fm > 0) == hi_pos:
            hi = mid
        else:
            lo = mid
        scale = max(abs(lo), abs(hi))
        if hi - lo <= scale * Fraction(rel_tol):
            break
    return float((lo + hi) / 2)


# -- inflection roots -------------------------------------------------------------


def inflection_polynomial() -> BivariatePolynomial:
    """The curve polynomial F_2, whose zero set carries the inflection points."""
    from .derivatives import curve_polynomial

    return curve_polynomial(0, 2, check_irreducible=False).F


@dataclass(frozen=True)
class InflectionRoots:
    c: float
    roots: list
    bisection: list
    double_root: bool
    agreement: float

    def central_pair(self) -> tuple[float, float]:
        """The two bisection roots closest to y = 0 from either side."""
        below = [r for r in self.bisection if r < 0]
        above = [r for r in self.bisection if r > 0]
        if not below or not above:
            raise ValueError(f"no root pair brackets y = 0 at c = {self.c}")
        return max(below), min(above)

    @property
    def width(self) -> float:
        lo, hi = self.central_pair()
        return hi - lo


def _quadratic_t_roots(c: float) -> list[float]:
    """Real y with 3t^2 + 2t(c^2 + c) - c^4 = 0 and t = y^2."""
    B = c * c + c
    D = B * B + 3 * c**4
    sD = math.sqrt(D)
    # product of the t-roots is -c^4/3 < 0, so exactly one is positive
    t = c**4 / (B + sD) if B > 0 else (sD - B) / 3
    r = math.sqrt(t)
    return [-r, r]


def inflection_roots(c, F: BivariatePolynomial | None = None) -> InflectionRoots:
    """Sorted real roots y of F(c, y), F_2 by default.

    For F_2 the roots come from the quadratic in t = y^2 and are compared with
    exact-sign bisection on F_2(c, .). A repeated root is flagged from an exact
    gcd with the y-derivative.
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    default = F is None
    if default:
        F = inflection_polynomial()
    p = _specialize(F, c)
    double = gcd_field(p, p.derivative()).degree > 0
    bis = [bisect_root(p, lo, hi) for lo, hi in isolate_real_roots(p)]
    roots = _quadratic_t_roots(float(c)) if default else bis
    if len(roots) != len(bis):
        agreement = math.inf
    else:
        agreement = max(
            (abs(a - b) / max(abs(a), abs(b)) for a, b in zip(roots, bis) if a or b), default=0.0
        )
    return InflectionRoots(float(c), roots, bis, double, agreement)


# -- widths ------------------------------------------------------------------------


@dataclass(frozen=True)
class WidthMeasurement:
    c: float
    measured: float
    predicted: float
    rel_error: float

    def __post_init__(self):
        if not self.measured > 0:
            raise ValueError("width must be positive")


def _measure(c: float, predicted: float) -> WidthMeasurement:
    w = inflection_roots(c).width
    return WidthMeasurement(abs(c), w, predicted, abs(w / predicted - 1))


def right_width(c: float) -> WidthMeasurement:
    """R_c: central root pair at x = c > 0, predicted 2 sqrt(1/2) c^{3/2}."""
    if c <= 0:
        raise ValueError("right width needs c > 0")
    return _measure(c, 2 * math.sqrt(0.5) * c**1.5)


def left_width(c: float) -> WidthMeasurement:
    """L_c: central root pair at x = -c < 0, predicted 2 sqrt(2/3) c^{1/2}."""
    if c <= 0:
        raise ValueError("left width needs c > 0")
    return _measure(-c, 2 * math.sqrt(2 / 3) * c**0.5)


class WidthRatio(NamedTuple):
    ratio: float
    predicted: float
    rel_error: float


def width_ratio(c: float) -> WidthRatio:
    """R_c / L_c against the asymptotic value sqrt(3/4) c."""
    if c <= 0:
        raise ValueError("width ratio needs c > 0")
    ratio = right_width(c).measured / left_width(c).measured
    pred = SQRT_3_4 * c
    return WidthRatio(ratio, pred, abs(ratio / pred - 1))


def ratio_convergence(cs=(1e-2, 1e-3, 1e-4)) -> dict:
    """ratio(c)/c for decreasing c, with a monotonicity flag."""
    vals = [width_ratio(c).ratio / c for c in cs]
    errs = [abs(v - SQRT_3_4) for v in vals]
    return {
        "c": list(cs),
        "ratio_over_c": vals,
        "limit": SQRT_3_4,
        "monotone": all(b < a for a, b in zip(errs, errs[1:])),
    }


def power_law_exponents(cmin: float = 1e-5, cmax: float = 1e-3, n: int = 21) -> dict:
    """Log-log slopes of R_c and L_c over a geometric range of c."""
    import numpy as np

    cs = np.geomspace(cmin, cmax, n)
    lr = np.log([right_width(float(c)).measured for c in cs])
    ll = np.log([left_width(float(c)).measured for c in cs])
    lc = np.log(cs)
    return {"right": float(np.polyfit(lc, lr, 1)[0]), "left": float(np.polyfit(lc, ll, 1)[0])}


WIDTH_COLUMNS = ("c", "R_measured", "R_predicted", "L_measured", "L_predicted", "ratio", "rel_error")


def width_sweep(cs) -> list[dict]:
    rows = []
    for c in cs:
        R, L, q = right_width(c), left_width(c), width_ratio(c)
        rows.append(
            dict(zip(WIDTH_COLUMNS, (c, R.measured, R.predicted, L.measured, L.predicted, q.ratio, q.rel_error)))
        )
    return rows


def write_width_csv(rows: list[dict], stream) -> None:
    w = csv.DictWriter(stream, fieldnames=WIDTH_COLUMNS, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: repr(float(v)) for k, v in row.items()})


def sample_to_dict(s: FieldSample) -> dict:
    return asdict(s)


__all__ = [
    "EssentialSingularityError",
    "FieldSample",
    "InflectionRoots",
    "NEAR_ORIGIN",
    "SQRT_3_4",
    "WIDTH_COLUMNS",
    "WidthMeasurement",
    "WidthRatio",
    "bisect_root",
    "eval_field",
    "inflection_polynomial",
    "inflection_roots",
    "isolate_real_roots",
    "left_width",
    "level_circle",
    "power_law_exponents",
    "ratio_convergence",
    "reference_field",
    "right_width",
    "sample_to_dict",
    "width_ratio",
    "width_sweep",
    "write_width_csv",
]
