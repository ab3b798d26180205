"""Singularity reports, singular-locus certification and the genus of a plane curve."""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction

from ..arith import BivariatePolynomial, UPoly, format_coeff, gcd_field, poly_resultant, squarefree_decomposition
from ..arith.upoly import format_upoly
from .local import at_point, binary_form_roots_poly, chart, circle_point_germ, is_ordinary, multiplicity, shear
from .milnor import milnor_number
from .puiseux import ExtensionUnsupportedError, expand_germ


class InconsistentInvariantsError(ArithmeticError):
    """delta from branches disagrees with delta from the Milnor number."""


class NotOnCurveError(ValueError):
    pass


class CertificationError(ArithmeticError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ReducibilityDetectedError(ArithmeticError):
    """Raised when the genus comes out negative."""


@dataclass
class SingularityReport:
    point: str
    multiplicity: int
    r: int
    mu: int
    delta: int
    ordinary: bool
    coordinates: tuple = ()
    branches: list = field(default_factory=list)
    seed: int = 0

    def __post_init__(self):
        if 2 * self.delta != self.mu + self.r - 1:
            raise InconsistentInvariantsError(
                f"{self.point}: 2*delta = {2 * self.delta} but mu + r - 1 = {self.mu + self.r - 1}"
            )
        if self.ordinary and self.delta != self.multiplicity * (self.multiplicity - 1) // 2:
            raise InconsistentInvariantsError(f"{self.point}: ordinary point with delta {self.delta}")

    @property
    def profile(self) -> dict:
        counts: dict[str, int] = {}
        for b in self.branches:
            counts[b["kind"]] = counts.get(b["kind"], 0) + 1
        return counts

    def to_dict(self, with_branches: bool = False) -> dict:
        d = {
            "point": self.point,
            "mult": self.multiplicity,
            "r": self.r,
            "mu": self.mu,
            "delta": self.delta,
            "ordinary": self.ordinary,
        }
        if with_branches:
            d["branches"] = self.branches
        return d


@dataclass
class GenusReport:
    degree: int
    reports: list
    genus: int
    a: int | None = None
    b: int | None = None

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "degree": self.degree,
            "genus": self.genus,
            "singularities": [r.to_dict() for r in self.reports],
        }


@dataclass
class SingularPoint:
    label: str
    coordinates: tuple
    germ: BivariatePolynomial  # the curve moved so that the point is the origin
    at_infinity: bool = False


@dataclass
class InfinitePoint:
    label: str
    contact: int  # intersection multiplicity with the line at infinity
    singular: bool


@dataclass
class SingularLocus:
    affine: list
    infinity: list
    certificate: dict

    @property
    def singular_points(self) -> list:
        return self.affine + [p for p in self.infinity if isinstance(p, SingularPoint)]

    def to_dict(self) -> dict:
        return {
            "affine": [p.label for p in self.affine],
            "infinity": [
                {"point": p.label, "singular": isinstance(p, SingularPoint)}
                if isinstance(p, SingularPoint)
                else {"point": p.label, "contact": p.contact, "singular": p.singular}
                for p in self.infinity
            ],
            "certificate": self.certificate,
        }


# -- single points ------------------------------------------------------------------


def delta_invariant(F: BivariatePolynomial, point=(0, 0), seed: int = 0, label: str | None = None) -> SingularityReport:
    """Branch data, delta and mu at ``point``; the two deltas must agree."""
    G = at_point(F, *point)
    return _germ_report(G, label or _affine_label(point), tuple(point), seed)


def _germ_report(G: BivariatePolynomial, label: str, coords: tuple, seed: int) -> SingularityReport:
    m = multiplicity(G)
    if m == 0:
        raise NotOnCurveError(f"{label} is not on the curve")
    if m == 1:
        return SingularityReport(label, 1, 1, 0, 0, True, coords, [], seed)
    germ = expand_germ(G)
    mu = milnor_number(G, seed).mu
    return SingularityReport(
        point=label,
        multiplicity=m,
        r=germ.r,
        mu=mu,
        delta=germ.delta,
        ordinary=is_ordinary(G),
        coordinates=coords,
        branches=[b.to_dict() for b in germ.branches],
        seed=seed,
    )


def circle_point_check(F: BivariatePolynomial, seed: int = 0) -> tuple[SingularityReport, SingularityReport]:
    """Reports at (i : 1 : 0) and (-i : 1 : 0).

    Ordinary points get delta = k(k-1)/2 directly; mu is still computed from
    the resultant over Q(i) so the report carries an independent check.
    """
    out = []
    for sign in (1, -1):
        label = "circle(+i)" if sign > 0 else "circle(-i)"
        if sign < 0 and F.domain == "QQ":
            # complex conjugation swaps the two circle points of a real curve
            first = out[0]
            out.append(replace(first, point=label, coordinates=("-i", 1, 0)))
            continue
        G = circle_point_germ(F, sign)
        k = multiplicity(G)
        if k == 0:
            raise NotOnCurveError(f"{label} is not on the projective closure")
        if k == 1 or not is_ordinary(G):
            out.append(_germ_report(G, label, (f"{'' if sign > 0 else '-'}i", 1, 0), seed))
            continue
        mu = milnor_number(G, seed).mu
        out.append(
            SingularityReport(label, k, k, mu, k * (k - 1) // 2, True, (f"{'' if sign > 0 else '-'}i", 1, 0), [], seed)
        )
    return out[0], out[1]


# -- the singular locus -----------------------------------------------------------------


def _affine_label(point) -> str:
    x0, y0 = point
    if x0 == 0 and y0 == 0:
        return "origin"
    return f"({format_coeff(x0)},{format_coeff(y0)})"


def _pure_power(g: UPoly) -> bool:
    return g.degree >= 0 and g.degree == g.valuation()


_PRIMES = (1000003, 1000033, 1000037, 1000039)


def _strip_x(R: UPoly) -> UPoly:
    return UPoly(list(R)[R.valuation():]).primitive_integer()


def _gcd_degree_mod(polys: list[UPoly], p: int) -> int | None:
    """Degree of the gcd modulo p, or None if p divides a leading coefficient."""
    reduced = []
    for P in polys:
        c = [int(a) % p for a in P]
        if c[-1] == 0:
            return None
        reduced.append(c)

    def trim(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def rem(a, b):
        a = list(a)
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            q = a[-1] * inv % p
            off = len(a) - len(b)
            for i, bc in enumerate(b):
                a[off + i] = (a[off + i] - q * bc) % p
            trim(a)
            if not a:
                break
        return a

    g = reduced[0]
    for b in reduced[1:]:
        a = g
        while b:
            a, b = b, rem(a, b)
        g = a
        if len(g) == 1:
            return 0
    return len(g) - 1


def _frame_gcd(G: BivariatePolynomial) -> tuple[bool, int, list]:
    """(certified, x-power, resultants) for the frame of G.

    The y-resultants of pairs among G, G_x, G_y vanish at the x-coordinate
    of every singular point.  After removing powers of x they are checked
    for coprimality modulo a few large primes: a unit gcd mod p, with p not
    dividing the leading coefficients, is a unit gcd over Q.
    """
    Gx, Gy = G.derivative(0), G.derivative(1)
    rs = []
    for A, B in ((G, Gy), (Gx, Gy), (G, Gx)):
        if not A or not B or (A.is_constant() and B.is_constant()):
            continue
        R = poly_resultant(A, B, 1).univariate(0)
        if R:
            rs.append(R)
        if len(rs) < 2:
            continue
        stripped = [_strip_x(R) for R in rs]
        if any(S.degree == 0 for S in stripped):
            return True, min(R.valuation() for R in rs), rs
        for p in _PRIMES:
            if _gcd_degree_mod(stripped, p) == 0:
                return True, min(R.valuation() for R in rs), rs
    if not rs:
        raise CertificationError("every resultant vanished identically")
    if len(rs) == 1:
        S = _strip_x(rs[0])
        return S.degree == 0, rs[0].valuation(), rs
    return False, 0, rs


def _witness(rs: list) -> UPoly:
    g = _strip_x(rs[0])
    for R in rs[1:]:
        g = gcd_field(g, _strip_x(R))
    return g.monic()


def _rational_roots(p: UPoly) -> list[Fraction]:
    """Distinct rational roots of a univariate polynomial over Q."""
    roots = []
    if p.degree <= 0:
        return roots
    v = p.valuation()
    if v:
        roots.append(Fraction(0))
        p = UPoly(list(p)[v:])
    p = p.primitive_integer()
    if p.degree <= 0:
        return roots
    a0, an = abs(int(p[0])), abs(int(p.lc()))
    if max(a0, an) > 10**12:
        raise ExtensionUnsupportedError("rational root search beyond the supported size")
    for q in _divisors(an):
        for s in _divisors(a0):
            for cand in (Fraction(s, q), Fraction(-s, q)):
                if cand not in roots and p(cand) == 0:
                    roots.append(cand)
    return roots


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _line_points(G: BivariatePolynomial, k) -> list:
    """Singular points of G on x = 0, mapped back through the shear."""
    p0 = _restrict(G)
    px = _restrict(G.derivative(0))
    py = _restrict(G.derivative(1))
    h = None
    for p in (p0, px, py):
        if not p:
            continue
        h = p if h is None else gcd_field(h, p)
    if h is None:
        raise CertificationError("the line x = 0 lies in the singular locus")
    if h.degree <= 0:
        return []
    sq = UPoly([1])
    for f, _i in squarefree_decomposition(h):
        sq = sq * f
    roots = _rational_roots(sq)
    if len(roots) != sq.degree:
        raise ExtensionUnsupportedError(f"singular points with irrational coordinates: {format_upoly(sq, 'y')}")
    return [(k * y0, y0) for y0 in sorted(roots)]


def _restrict(G: BivariatePolynomial) -> UPoly:
    """G(0, y) as a univariate polynomial."""
    coeffs: dict[int, object] = {}
    for (i, j), c in G.terms.items():
        if i == 0:
            coeffs[j] = c
    d = max(coeffs) if coeffs else -1
    return UPoly([coeffs.get(j, 0) for j in range(d + 1)])


CIRCLE = UPoly([1, 0, 1])


def _infinity(F: BivariatePolynomial) -> list:
    L = F.leading_form()
    p, at_x_axis = binary_form_roots_poly(L)
    pts = []
    if at_x_axis == 1:
        pts.append(InfinitePoint("(1:0:0)", 1, False))
    elif at_x_axis > 1:
        pts.append(_infinite_germ_point(chart(F, "x"), "(1:0:0)", (1, 0, 0)))
    for f, i in squarefree_decomposition(p):
        if i == 1:
            pts.append(InfinitePoint(f"({format_upoly(f, 't')} = 0 : 1 : 0)", 1, False))
            continue
        if f.degree >= 2 and not f.divmod(CIRCLE)[1]:
            for sign, label in ((1, "circle(+i)"), (-1, "circle(-i)")):
                pts.append(SingularPoint(label, (f"{'' if sign > 0 else '-'}i", 1, 0), circle_point_germ(F, sign), True))
            f = f.exquo(CIRCLE)
            if f.degree <= 0:
                continue
        roots = _rational_roots(f)
        if len(roots) != f.degree:
            raise ExtensionUnsupportedError(f"repeated irrational direction at infinity: {format_upoly(f, 't')}")
        Gy = chart(F, "y")
        for t0 in roots:
            pts.append(_infinite_germ_point(Gy.translate(t0, 0), f"({format_coeff(t0)}:1:0)", (t0, 1, 0)))
    return pts


def _infinite_germ_point(G, label, coords):
    if multiplicity(G) >= 2:
        return SingularPoint(label, coords, G, True)
    return InfinitePoint(label, 2, False)


def certify_singular_locus(F: BivariatePolynomial, seed: int = 0, attempts: int = 4) -> SingularLocus:
    """All singular points of the projective closure of F.

    Affine part: the gcd of resultants of F, F_x, F_y with respect to y must be
    a power of x, first in the given frame and then after random shears
    x -> x + k*y.  Solving on the line x = 0 of the certifying frame then
    gives every affine singular point.
    """
    if not F or F.is_constant():
        raise ValueError("need a nonconstant polynomial")
    rng = random.Random(seed)
    shears = [0] + [rng.randint(1, 100) for _ in range(attempts - 1)]
    witness = None
    for k in shears:
        G = shear(F, k)
        ok, e, rs = _frame_gcd(G)
        if ok:
            affine = [
                SingularPoint(_affine_label(pt), pt, at_point(F, *pt)) for pt in _line_points(G, k)
            ]
            cert = {"shear": k, "resultant_gcd": f"x^{e}" if e > 0 else "1", "seed": seed}
            return SingularLocus(affine, _infinity(F), cert)
        if witness is None:
            witness = _witness(rs)
    raise CertificationError(
        f"singular x-coordinate other than 0 possible: witness {format_upoly(witness, 'x')}", witness
    )


# -- genus ---------------------------------------------------------------------------


def genus(F: BivariatePolynomial, seed: int = 0, a: int | None = None, b: int | None = None) -> GenusReport:
    """(d-1)(d-2)/2 minus the delta invariants of every singular point."""
    d = F.degree
    locus = certify_singular_locus(F, seed)
    reports = []
    circle_done = False
    for pt in locus.singular_points:
        if pt.label.startswith("circle"):
            if not circle_done:
                reports.extend(circle_point_check(F, seed))
                circle_done = True
            continue
        reports.append(_germ_report(pt.germ, pt.label, pt.coordinates, seed))
    reports = [r for r in reports if r.multiplicity >= 2]
    g = (d - 1) * (d - 2) // 2 - sum(r.delta for r in reports)
    if g < 0:
        raise ReducibilityDetectedError(f"negative genus {g}: the curve is reducible")
    return GenusReport(d, reports, g, a, b)
