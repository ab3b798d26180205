"""Dense univariate polynomials over an exact coefficient ring.

Coefficients are stored low degree first.  The coefficient ring can be
``int``/``Fraction``, :class:`GaussianRational`, or another :class:`UPoly`
(which is how bivariate polynomials are viewed for resultants and gcds).
"""

from __future__ import annotations

from fractions import Fraction

from .numbers import exact_div, normalize


def _is_zero(c) -> bool:
    return not c


def _cdiv(a, b):
    if isinstance(a, UPoly):
        return a.exquo(b)
    if isinstance(b, UPoly):
        return UPoly([a]).exquo(b)
    return exact_div(a, b)


class UPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [normalize(x) for x in coeffs]
        while c and _is_zero(c[-1]):
            c.pop()
        self.c = c

    @classmethod
    def monomial(cls, coeff, deg: int) -> "UPoly":
        return cls([0] * deg + [coeff])

    @classmethod
    def x(cls) -> "UPoly":
        return cls([0, 1])

    # -- basic accessors -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def lc(self):
        return self.c[-1] if self.c else 0

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __iter__(self):
        return iter(self.c)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.c == other.c
        if not self.c:
            return not other
        return len(self.c) == 1 and self.c[0] == other

    def __hash__(self):
        return hash(tuple(self.c))

    def __repr__(self):
        return f"UPoly({self.c!r})"

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def valuation(self) -> int:
        """Order of vanishing at 0; raises on the zero polynomial."""
        for i, a in enumerate(self.c):
            if not _is_zero(a):
                return i
        raise ValueError("valuation of zero polynomial")

    # -- ring operations ---------------------------------------------------
    def _coerce(self, other) -> "UPoly":
        return other if isinstance(other, UPoly) else UPoly([other])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.c), len(o.c))
        return UPoly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-a for a in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            if _is_zero(other):
                return UPoly()
            return UPoly([a * other for a in self.c])
        if not self.c or not other.c:
            return UPoly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.c):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = UPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, k) -> "UPoly":
        return UPoly([a * k for a in self.c])

    # -- division ------------------------------------------------------------
    def divmod(self, other: "UPoly"):
        """Division with remainder; the leading coefficient of ``other`` must
        divide exactly whatever is needed (always true over a field)."""
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        q = [0] * max(len(r) - len(other.c) + 1, 0)
        lc = other.c[-1]
        d = len(other.c) - 1
        for k in range(len(r) - 1, d - 1, -1):
            if _is_zero(r[k]):
                continue
            f = _cdiv(r[k], lc)
            q[k - d] = f
            for j, b in enumerate(other.c):
                r[k - d + j] = r[k - d + j] - f * b
        return UPoly(q), UPoly(r[:d] if d > 0 else [])

    def exquo(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            return UPoly([_cdiv(a, other) for a in self.c])
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def cdiv(self, d) -> "UPoly":
        """Divide every coefficient exactly by the ring element ``d``."""
        return UPoly([_cdiv(a, d) for a in self.c])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def prem(self, other: "UPoly") -> "UPoly":
        """Pseudo-remainder: lc(other)^(deg self - deg other + 1) * self mod other."""
        if not other.c:
            raise ZeroDivisionError("pseudo-remainder by zero")
        d = len(other.c) - 1
        lc = other.c[-1]
        r = list(self.c)
        delta = len(r) - 1 - d
        if delta < 0:
            return UPoly(r)
        for k in range(len(r) - 1, d - 1, -1):
            top = r[k]
            r = [a * lc for a in r]
            if not _is_zero(top):
                for j, b in enumerate(other.c):
                    r[k - d + j] = r[k - d + j] - top * b
            r[k] = 0
        return UPoly(r[:d])

    # -- calculus / evaluation --------------------------------------------
    def derivative(self) -> "UPoly":
        return UPoly([i * a for i, a in enumerate(self.c)][1:])

    def __call__(self, t):
        acc = 0
        for a in reversed(self.c):
            acc = acc * t + a
        return acc

    def monic(self) -> "UPoly":
        if not self.c:
            return self
        return self.exquo(self.c[-1])

    def content(self):
        """gcd of integer/rational coefficients (field case: positive rational)."""
        from math import gcd

        fr = [Fraction(a) for a in self.c]
        num = 0
        den = 1
        for f in fr:
            num = gcd(num, f.numerator)
            den = den * f.denominator // gcd(den, f.denominator)
        return normalize(Fraction(num, den)) if num else 0

    def primitive_integer(self) -> "UPoly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.c:
            return self
        ct = self.content()
        p = self.exquo(ct)
        return -p if p.lc() < 0 else p

    def compose(self, other: "UPoly") -> "UPoly":
        acc = UPoly()
        for a in reversed(self.c):
            acc = acc * other + a
        return acc

    def __str__(self):
        return format_upoly(self, "t")


def format_upoly(p: UPoly, var: str = "t") -> str:
    from .numbers import format_coeff

    if not p.c:
        return "0"
    parts = []
    for i in range(len(p.c) - 1, -1, -1):
        a = p.c[i]
        if _is_zero(a):
            continue
        s = format_coeff(a) if not isinstance(a, UPoly) else f"({a})"
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono:
            if s == "1":
                s = mono
            elif s == "-1":
                s = "-" + mono
            else:
                s = f"{s}*{mono}"
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
    return out
