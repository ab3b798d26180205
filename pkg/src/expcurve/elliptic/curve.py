"""Weierstrass models over Q with integral coefficients, and the chord-tangent group law."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..arith.numbers import normalize


class SingularCurveError(ValueError):
    pass


class OffCurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurvePoint:
    """An affine point, or the point at infinity when ``x`` is None."""

    x: Fraction | int | None = None
    y: Fraction | int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def is_integral(self) -> bool:
        return self.is_infinity or (Fraction(self.x).denominator == 1 and Fraction(self.y).denominator == 1)

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({Fraction(self.x)}, {Fraction(self.y)})"

    def to_list(self):
        return None if self.is_infinity else [str(Fraction(self.x)), str(Fraction(self.y))]


INFINITY = CurvePoint()


def point(x, y) -> CurvePoint:
    return CurvePoint(normalize(Fraction(x)), normalize(Fraction(y)))


_CURVE_RE = re.compile(r"^\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*$")


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            v = getattr(self, name)
            if Fraction(v).denominator != 1:
                raise ValueError(f"{name} = {v} is not an integer")
            object.__setattr__(self, name, int(v))
        if self.discriminant == 0:
            raise SingularCurveError(f"singular curve {self.ainvs}")

    @classmethod
    def parse(cls, text: str) -> "WeierstrassCurve":
        m = _CURVE_RE.match(text.replace("−", "-"))
        if not m:
            raise ValueError(f"expected [a1,a2,a3,a4,a6], got {text!r}")
        return cls(*(int(g) for g in m.groups()))

    @classmethod
    def short(cls, A: int, B: int) -> "WeierstrassCurve":
        return cls(0, 0, 0, A, B)

    @property
    def ainvs(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.ainvs) + "]"

    # -- invariants ----------------------------------------------------------
    @property
    def b2(self) -> int:
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self) -> int:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> int:
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self) -> int:
        a1, a2, a3, a4, a6 = self.ainvs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self) -> int:
        return self.b2**2 - 24 * self.b4

    @property
    def c6(self) -> int:
        return -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j(self) -> Fraction:
        return normalize(Fraction(self.c4**3, self.discriminant))

    def invariants(self) -> dict:
        return {
            "b2": self.b2, "b4": self.b4, "b6": self.b6, "b8": self.b8,
            "c4": self.c4, "c6": self.c6, "discriminant": self.discriminant, "j": str(self.j),
        }

    @property
    def is_short(self) -> bool:
        return self.a1 == 0 and self.a2 == 0 and self.a3 == 0

    def short_model(self) -> "WeierstrassCurve":
        """y^2 = x^3 - 27 c4 x - 54 c6, isomorphic over Q."""
        return WeierstrassCurve(0, 0, 0, -27 * self.c4, -54 * self.c6)

    def to_short_point(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        x, y = Fraction(P.x), Fraction(P.y)
        return point(36 * x + 3 * self.b2, 108 * (2 * y + self.a1 * x + self.a3))

    def from_short_point(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        X, Y = Fraction(P.x), Fraction(P.y)
        x = (X - 3 * self.b2) / 36
        y = (Y / 108 - self.a1 * x - self.a3) / 2
        return point(x, y)

    def rst(self, r, s, t) -> "WeierstrassCurve":
        """Change of coordinates x = x' + r, y = y' + s x' + t (u = 1)."""
        a1, a2, a3, a4, a6 = self.ainvs
        return WeierstrassCurve(
            a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1,
        )

    # -- points --------------------------------------------------------------
    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        x, y = Fraction(P.x), Fraction(P.y)
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6

    def lift_x(self, x) -> list[CurvePoint]:
        """Rational points with the given x-coordinate."""
        from math import isqrt

        x = Fraction(x)
        a1, a2, a3, a4, a6 = self.ainvs
        # y^2 + (a1 x + a3) y - f(x) = 0
        b = a1 * x + a3
        disc = b * b + 4 * (x**3 + a2 * x * x + a4 * x + a6)
        if disc < 0:
            return []
        n, d = disc.numerator, disc.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn != n or rd * rd != d:
            return []
        root = Fraction(rn, rd)
        ys = sorted({(-b + root) / 2, (-b - root) / 2})
        return [point(x, y) for y in ys]

    def _check(self, P: CurvePoint) -> None:
        if not self.contains(P):
            raise OffCurveError(f"{P} is not on {self}")

    def neg(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        x, y = Fraction(P.x), Fraction(P.y)
        return point(x, -y - self.a1 * x - self.a3)

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        self._check(P)
        self._check(Q)
        return self._add(P, Q)

    def _add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4, a6 = self.ainvs
        x1, y1, x2, y2 = Fraction(P.x), Fraction(P.y), Fraction(Q.x), Fraction(Q.y)
        if x1 == x2:
            if y1 + y2 + a1 * x2 + a3 == 0:
                return INFINITY
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
        else:
            lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return point(x3, y3)

    def multiple(self, P: CurvePoint, n: int) -> CurvePoint:
        self._check(P)
        if n < 0:
            P, n = self.neg(P), -n
        R = INFINITY
        while n:
            if n & 1:
                R = self._add(R, P)
            P = self._add(P, P)
            n >>= 1
        return R

    def order(self, P: CurvePoint, bound: int = 12) -> int | None:
        """Order of P if at most ``bound``, else None."""
        self._check(P)
        Q = P
        for n in range(1, bound + 1):
            if Q.is_infinity:
                return n
            Q = self._add(Q, P)
        return None
