"""Exact scalars: rationals (``fractions.Fraction``/``int``) and Gaussian rationals."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


def normalize(c):
    """Collapse integral Fractions to int; leave everything else alone."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def exact_div(a, b):
    """a / b without ever producing a float."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        return GaussianRational.coerce(a) / b
    return normalize(Fraction(a) / Fraction(b))


class GaussianRational:
    """Element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = normalize(Fraction(re))
        self.im = normalize(Fraction(im))

    @classmethod
    def coerce(cls, v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, _RationalABC):
            return cls(v, 0)
        raise TypeError(f"cannot coerce {type(v).__name__} to GaussianRational")

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return format_coeff(self)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return Fraction(self.re) ** 2 + Fraction(self.im) ** 2

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        p = self * o.conjugate()
        return GaussianRational(Fraction(p.re) / n, Fraction(p.im) / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return (GaussianRational(1) / self) ** (-e)
        result = GaussianRational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __complex__(self):
        return complex(float(self.re), float(self.im))


I = GaussianRational(0, 1)


def is_gaussian(c) -> bool:
    return isinstance(c, GaussianRational)


def to_complex(c) -> complex:
    if isinstance(c, GaussianRational):
        return complex(c)
    return complex(float(c), 0.0)


def format_coeff(c) -> str:
    """Decimal string form: ``-3``, ``5/7``, or ``1/2+3i`` / ``0-1i`` for Q(i)."""
    if isinstance(c, GaussianRational):
        im = Fraction(c.im)
        sign = "-" if im < 0 else "+"
        return f"{Fraction(c.re)}{sign}{abs(im)}i"
    return str(Fraction(c))


_GAUSS_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)([+-])(\d+(?:/\d+)?)i$")


def parse_coeff(s: str):
    s = s.strip()
    m = _GAUSS_RE.match(s)
    if m:
        im = Fraction(m.group(3))
        if m.group(2) == "-":
            im = -im
        return GaussianRational(Fraction(m.group(1)), im)
    return normalize(Fraction(s))
