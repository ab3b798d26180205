"""Tate's algorithm in the looping form that also covers p = 2 and p = 3."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import WeierstrassCurve


@dataclass(frozen=True)
class LocalReduction:
    p: int
    fp: int
    kodaira: str
    vdelta: int
    minimal_model: WeierstrassCurve | None = None

    @property
    def kind(self) -> str:
        if self.fp == 0:
            return "good"
        return "multiplicative" if self.fp == 1 else "additive"

    def to_dict(self) -> dict:
        return {"p": self.p, "fp": self.fp, "kodaira": self.kodaira, "vdelta": self.vdelta}


def valuation(n, p: int) -> int:
    """p-adic valuation of a nonzero integer or rational; 10**9 for 0."""
    n = Fraction(n)
    if n == 0:
        return 10**9
    v = 0
    num, den = n.numerator, n.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _div(a: int, p: int) -> bool:
    return a % p == 0


def _inv(a: int, p: int) -> int:
    return pow(a % p, -1, p)


def factor(n: int) -> dict[int, int]:
    """Prime factorization of a nonzero integer."""
    from sympy import factorint

    return {int(p): int(e) for p, e in factorint(abs(n)).items()}


def tate(W: WeierstrassCurve, p: int) -> LocalReduction:
    """Kodaira symbol, conductor exponent and a model minimal at p."""
    E = W
    half = (p + 1) // 2
    while True:
        vD = valuation(E.discriminant, p)
        if vD == 0:
            return LocalReduction(p, 0, "I0", 0, E)
        a1, a2, a3, a4, a6 = E.ainvs
        b2, b4, b6 = E.b2, E.b4, E.b6
        c4, c6 = E.c4, E.c6
        # move the singular point of the reduction to (0, 0)
        if p == 2:
            if _div(b2, 2):
                r = a4 % 2
                t = (r * (1 + a2 + a4) + a6) % 2
            else:
                r = a3 % 2
                t = (r + a4) % 2
        elif p == 3:
            r = (-b6) % 3 if _div(b2, 3) else (-b2 * b4) % 3
            t = (a1 * r + a3) % 3
        else:
            if _div(c4, p):
                r = (-_inv(12, p) * b2) % p
            else:
                r = (-_inv(12 * c4, p) * (c6 + b2 * c4)) % p
            t = (-half * (a1 * r + a3)) % p
        E = E.rst(r, 0, t)
        if not _div(c4, p):
            return LocalReduction(p, 1, f"I{vD}", vD, E)
        a1, a2, a3, a4, a6 = E.ainvs
        if valuation(a6, p) < 2:
            return LocalReduction(p, vD, "II", vD, E)
        if valuation(E.b8, p) < 3:
            return LocalReduction(p, vD - 1, "III", vD, E)
        if valuation(E.b6, p) < 3:
            return LocalReduction(p, vD - 2, "IV", vD, E)
        # now p | a1, a2 and p^2 | a3, a4 and p^3 | a6
        if p == 2:
            s = a2 % 2
            t = 2 * ((a6 // 4) % 2)
        elif p == 3:
            s, t = a1, a3
        else:
            s, t = -a1 * half, -a3 * half
        E = E.rst(0, s, t)
        a1, a2, a3, a4, a6 = E.ainvs
        pp, ppp = p * p, p**3
        b, c, d = a2 // p, a4 // pp, a6 // ppp
        w = 27 * d * d - b * b * c * c + 4 * b**3 * d - 18 * b * c * d + 4 * c**3
        x = 3 * c - b * b
        if not _div(w, p):
            return LocalReduction(p, vD - 4, "I0*", vD, E)
        if not _div(x, p):
            # double root: I_m*
            if p == 2:
                r = c % 2
            elif p == 3:
                r = (c * b) % 3
            else:
                r = ((b * c - 9 * d) * _inv(2 * x, p)) % p
            E = E.rst(p * r, 0, 0)
            ix, iy, mx, my = 3, 3, pp, pp
            while True:
                a1, a2, a3, a4, a6 = E.ainvs
                a2t, a3t, a4t, a6t = a2 // p, a3 // my, a4 // (p * mx), a6 // (mx * my)
                if not _div(a3t * a3t + 4 * a6t, p):
                    break
                t = my * (a6t % 2) if p == 2 else my * ((-a3t * half) % p)
                E = E.rst(0, 0, t)
                my *= p
                iy += 1
                a1, a2, a3, a4, a6 = E.ainvs
                a2t, a3t, a4t, a6t = a2 // p, a3 // my, a4 // (p * mx), a6 // (mx * my)
                if not _div(a4t * a4t - 4 * a6t * a2t, p):
                    break
                if p == 2:
                    r = mx * ((a6t * _inv(a2t, 2)) % 2)
                else:
                    r = mx * ((-a4t * _inv(2 * a2t, p)) % p)
                E = E.rst(r, 0, 0)
                mx *= p
                ix += 1
            m = ix + iy - 5
            return LocalReduction(p, vD - m - 4, f"I{m}*", vD, E)
        # triple root
        if p == 2:
            r = b % 2
        elif p == 3:
            r = (-d) % 3
        else:
            r = (-b * _inv(3, p)) % p
        E = E.rst(p * r, 0, 0)
        a1, a2, a3, a4, a6 = E.ainvs
        a3t, a6t = a3 // pp, a6 // (pp * pp)
        if not _div(a3t * a3t + 4 * a6t, p):
            return LocalReduction(p, vD - 6, "IV*", vD, E)
        t = -pp * (a6t % 2) if p == 2 else pp * ((-a3t * half) % p)
        E = E.rst(0, 0, t)
        a1, a2, a3, a4, a6 = E.ainvs
        if valuation(a4, p) < 4:
            return LocalReduction(p, vD - 7, "III*", vD, E)
        if valuation(a6, p) < 6:
            return LocalReduction(p, vD - 8, "II*", vD, E)
        # not minimal at p: scale by u = p and start over
        E = WeierstrassCurve(a1 // p, a2 // pp, a3 // ppp, a4 // (pp * pp), a6 // (ppp * ppp))


def local_data(W: WeierstrassCurve) -> list[LocalReduction]:
    return [tate(W, p) for p in sorted(factor(W.discriminant))]


def conductor(W: WeierstrassCurve) -> tuple[int, list[LocalReduction]]:
    data = local_data(W)
    N = 1
    for loc in data:
        N *= loc.p**loc.fp
    return N, data


def minimal_model(W: WeierstrassCurve) -> WeierstrassCurve:
    """Global minimal model in reduced form (a1, a3 in {0, 1}, a2 in {-1, 0, 1})."""
    E = W
    for p in sorted(factor(W.discriminant)):
        E = tate(E, p).minimal_model
    return reduce_model(E)


def reduce_model(E: WeierstrassCurve) -> WeierstrassCurve:
    a1, a2, a3, _a4, _a6 = E.ainvs
    s = ((a1 % 2) - a1) // 2
    a2s = a2 - s * a1 - s * s
    r = -((a2s + 1) // 3) if a2s >= 0 else ((-a2s + 1) // 3)
    a3r = a3 + r * a1
    t = ((a3r % 2) - a3r) // 2
    return E.rst(r, s, t)


def is_minimal(W: WeierstrassCurve) -> bool:
    """True when no prime admits a scaling to a model with smaller discriminant."""
    for p in factor(W.discriminant):
        if valuation(tate(W, p).minimal_model.discriminant, p) != valuation(W.discriminant, p):
            return False
    return True
