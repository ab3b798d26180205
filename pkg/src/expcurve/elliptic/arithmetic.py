"""Torsion, non-torsion certificates, integral points and quadratic twists."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .curve import INFINITY, CurvePoint, WeierstrassCurve, point
from .tate import factor, minimal_model

MAZUR_BOUND = 12


class NotTwistsError(ValueError):
    pass


class InconclusiveError(ArithmeticError):
    pass


# -- torsion -----------------------------------------------------------------------


def _integer_roots(A: int, k: int) -> list[int]:
    """Integer roots of x^3 + A x + k, found by exact bisection on monotone pieces."""
    f = lambda x: x**3 + A * x + k  # noqa: E731
    bound = 1 + max(abs(A), abs(k))
    cuts = [-bound, bound]
    if A < 0:
        c = isqrt(-A // 3) if -A >= 3 else 0
        # critical points are +-sqrt(-A/3); bracket them by integers
        cuts = [-bound, -c - 1, -c, c, c + 1, bound]
    cuts = sorted(set(cuts))
    roots = set()
    for lo, hi in zip(cuts, cuts[1:]):
        for x in (lo, hi):
            if f(x) == 0:
                roots.add(x)
        flo, fhi = f(lo), f(hi)
        if flo * fhi >= 0:
            continue
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if (f(mid) < 0) == (flo < 0):
                lo = mid
            else:
                hi = mid
        for x in (lo, hi):
            if f(x) == 0:
                roots.add(x)
    return sorted(roots)


def _square_divisor_roots(D: int) -> list[int]:
    """Positive y with y^2 | D."""
    out = [1]
    for p, e in factor(D).items():
        out = [y * p**k for y in out for k in range(e // 2 + 1)]
    return sorted(out)


@dataclass
class TorsionGroup:
    structure: tuple  # () trivial, (n,) cyclic, (2, 2m) non-cyclic
    generators: list
    points: list

    @property
    def order(self) -> int:
        n = 1
        for k in self.structure:
            n *= k
        return n

    def __str__(self):
        if not self.structure:
            return "trivial"
        return " x ".join(f"Z/{k}" for k in self.structure)


def torsion(W: WeierstrassCurve) -> TorsionGroup:
    """Torsion subgroup via Lutz-Nagell on the short model.

    Candidates have integral coordinates with y = 0 or y^2 | 4A^3 + 27B^2;
    each is kept only when its order is at most the Mazur bound.
    """
    S = W.short_model()
    A, B = S.a4, S.a6
    D = 4 * A**3 + 27 * B**2
    cands = []
    for y in [0] + _square_divisor_roots(D):
        for x in _integer_roots(A, B - y * y):
            for yy in {y, -y}:
                cands.append(point(x, yy))
    tors = [INFINITY]
    orders = {INFINITY: 1}
    for P in cands:
        n = S.order(P, MAZUR_BOUND)
        if n is not None and P not in orders:
            orders[P] = n
            tors.append(P)
    N = len(tors)
    two = [P for P in tors if orders[P] == 2]
    back = [W.from_short_point(P) for P in tors]
    by_order = sorted(zip(tors, back), key=lambda pq: (-orders[pq[0]], str(pq[1])))
    if N == 1:
        return TorsionGroup((), [], [INFINITY])
    if len(two) == 3:
        gen, gen_w = by_order[0]
        span = {S.multiple(gen, k) for k in range(orders[gen])}
        other = next(q for p, q in by_order if orders[p] == 2 and p not in span)
        return TorsionGroup((2, N // 2), [gen_w, other], back)
    gen_w = by_order[0][1]
    if orders[by_order[0][0]] != N:
        raise ArithmeticError("torsion points do not form a cyclic group")
    return TorsionGroup((N,), [gen_w], back)


# -- non-torsion certificates ----------------------------------------------------


@dataclass
class NonTorsionCertificate:
    torsion: bool
    n: int
    multiple: CurvePoint
    reason: str

    def __str__(self):
        return self.reason


def non_torsion_certificate(W: WeierstrassCurve, P: CurvePoint) -> NonTorsionCertificate:
    """Find n <= 12 with nP non-integral (torsion points on an integral short model
    are integral), or conclude from the Mazur bound that P has infinite order."""
    if not W.contains(P):
        raise ValueError(f"{P} is not on {W}")
    S = W if (W.a1 == 0 and W.a3 == 0) else W.short_model()
    Q0 = P if S is W else W.to_short_point(P)
    Q = INFINITY
    all_integral = True
    for n in range(1, MAZUR_BOUND + 1):
        Q = S._add(Q, Q0)
        if Q.is_infinity:
            return NonTorsionCertificate(True, n, Q, f"is {n}-torsion")
        if not Q.is_integral and all_integral:
            back = Q if S is W else W.from_short_point(Q)
            return NonTorsionCertificate(False, n, back, f"{n}P = {back} is not integral")
    return NonTorsionCertificate(False, MAZUR_BOUND, Q, "order exceeds the Mazur bound")


# -- integral points ----------------------------------------------------------------


def integral_points(W: WeierstrassCurve, bound: int = 10**6) -> list[CurvePoint]:
    """All integral points with |x| <= bound on y^2 = x^3 + a2 x^2 + a4 x + a6."""
    if W.a1 or W.a3:
        raise ValueError("integral_points needs a model with a1 = a3 = 0")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    a2, a4, a6 = W.a2, W.a4, W.a6
    out = []
    for x in range(-bound, bound + 1):
        v = ((x + a2) * x + a4) * x + a6
        if v < 0:
            continue
        r = isqrt(v)
        if r * r == v:
            out.append(point(x, r))
            if r:
                out.append(point(x, -r))
    return sorted(out, key=lambda P: (P.x, P.y))


# -- twists ----------------------------------------------------------------------------


def squarefree_part(q) -> int:
    """Signed squarefree integer d with q / d a rational square."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no squarefree part")
    n = q.numerator * q.denominator  # same square class
    d = -1 if n < 0 else 1
    for p, e in factor(n).items():
        if e % 2:
            d *= p
    return d


def quadratic_twist(W: WeierstrassCurve, d: int) -> WeierstrassCurve:
    """Minimal model of y^2 = x^3 - 27 d^2 c4 x - 54 d^3 c6."""
    return minimal_model(WeierstrassCurve(0, 0, 0, -27 * d * d * W.c4, -54 * d**3 * W.c6))


def _is_rational_square(q: Fraction) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    n, m = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(m) ** 2 == m


def twist_detect(W: WeierstrassCurve, V: WeierstrassCurve) -> int:
    """Squarefree d with W isomorphic to the twist of V by d."""
    if W.j != V.j:
        raise NotTwistsError(f"j-invariants differ: {W.j} vs {V.j}")
    if W.c4 == 0 or W.c6 == 0:
        if (W.c4, W.c6) == (V.c4, V.c6):
            return 1
        raise NotTwistsError("j = 0 or 1728: twists are not quadratic in general")
    r4 = Fraction(W.c4, V.c4)
    r6 = Fraction(W.c6, V.c6)
    q = r6 / r4  # = u^2 d
    d = squarefree_part(q)
    u2 = q / d
    if not _is_rational_square(u2) or r4 != u2 * u2 * d * d:
        raise NotTwistsError("c4 and c6 ratios are incompatible")
    T = quadratic_twist(V, d)
    if minimal_model(W) != T:
        raise NotTwistsError(f"explicit twist by {d} does not match")
    return d


__all__ = [
    "InconclusiveError",
    "MAZUR_BOUND",
    "NonTorsionCertificate",
    "NotTwistsError",
    "TorsionGroup",
    "integral_points",
    "non_torsion_certificate",
    "quadratic_twist",
    "squarefree_part",
    "torsion",
    "twist_detect",
]
