"""Bivariate gcd and reduced rational functions."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .algorithms import gcd_field, primitive_prs_gcd, resultant as _uresultant
from .bivariate import BivariatePolynomial
from .numbers import GaussianRational
from .upoly import UPoly


def _content_q(p: UPoly) -> UPoly:
    cs = [c if isinstance(c, UPoly) else UPoly([c]) for c in p.c if c]
    if not cs:
        return UPoly([1])
    g = reduce(gcd_field, cs)
    return g if g else UPoly([1])


def _gcd_q(a: UPoly, b: UPoly) -> UPoly:
    return gcd_field(a, b)


def _normalize_gcd(g: BivariatePolynomial) -> BivariatePolynomial:
    if g.domain == "QQ":
        return g.primitive()
    lead = g.sorted_terms()[0][1]
    return g.exquo(lead)


def poly_gcd(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    """gcd in Q[x, y] (or Q(i)[x, y]), normalized (primitive / leading coefficient 1).

    Rational inputs go through sympy's sparse gcd, which avoids the coefficient
    growth of pseudo-remainder sequences on the large numerators met in the
    satellite recursion; Gaussian inputs use :func:`prs_gcd`.
    """
    if not p:
        return _normalize_gcd(q) if q else q
    if not q:
        return _normalize_gcd(p)
    if p.is_constant() or q.is_constant():
        return BivariatePolynomial.const(1, p.vars)
    if p.domain == "QQ" and q.domain == "QQ":
        return _normalize_gcd(_sympy_gcd(p, q))
    return prs_gcd(p, q)


def _sympy_gcd(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    from sympy import QQ
    from sympy.polys.rings import ring

    R, _, _ = ring("x,y", QQ)

    def to_ring(f):
        return R.from_dict({m: QQ(Fraction(c).numerator, Fraction(c).denominator) for m, c in f.terms.items()})

    g = to_ring(p).gcd(to_ring(q))
    return BivariatePolynomial({m: Fraction(int(c.numerator), int(c.denominator)) for m, c in g.items()}, p.vars)


def prs_gcd(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    """gcd by primitive pseudo-remainder sequences over Q[x] or Q(i)[x]."""
    if p.is_constant() or q.is_constant():
        return BivariatePolynomial.const(1, p.vars)
    # coefficients of both as UPoly so every coefficient lives in Q[x]
    pu = _lift_coeffs(p.to_upoly(1))
    qu = _lift_coeffs(q.to_upoly(1))
    g = primitive_prs_gcd(pu, qu, _gcd_q, _content_q)
    out = BivariatePolynomial.from_upoly(g, 1, p.vars)
    return _normalize_gcd(out)


def _lift_coeffs(p: UPoly) -> UPoly:
    out = UPoly()
    out.c = [c if isinstance(c, UPoly) else UPoly([c]) for c in p.c]
    return out


def poly_resultant(p: BivariatePolynomial, q: BivariatePolynomial, var: int) -> BivariatePolynomial:
    """Res_var(p, q) as a polynomial in the remaining variable (subresultant PRS)."""
    if not p or not q:
        raise ValueError("resultant of zero polynomial")
    pu = _lift_coeffs(p.to_upoly(var))
    qu = _lift_coeffs(q.to_upoly(var))
    r = _uresultant(pu, qu)
    other = 1 - var
    if isinstance(r, UPoly):
        return BivariatePolynomial.from_univariate(r, other, p.vars)
    return BivariatePolynomial.const(r, p.vars)


class RationalFunction:
    """Reduced quotient num/den of bivariate polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce_=True):
        if not isinstance(num, BivariatePolynomial):
            num = BivariatePolynomial.const(num)
        if den is None:
            den = BivariatePolynomial.const(1, num.vars)
        elif not isinstance(den, BivariatePolynomial):
            den = BivariatePolynomial.const(den, num.vars)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce_:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @property
    def vars(self):
        return self.num.vars

    @classmethod
    def gens(cls, vars=("x", "y")):
        x, y = BivariatePolynomial.gens(vars)
        return cls(x), cls(y)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den.is_constant() and self.den.constant_term() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_polynomial(self) -> BivariatePolynomial:
        if not self.den.is_constant():
            raise ValueError("not a polynomial")
        return self.num.exquo(self.den.constant_term())

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = RationalFunction(other)
            except TypeError:
                return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    @staticmethod
    def _lift(o):
        return o if isinstance(o, RationalFunction) else RationalFunction(o)

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce_=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(self.den ** (-e), self.num ** (-e))
        return RationalFunction(self.num ** e, self.den ** e, reduce_=False)

    def derivative(self, var: int) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative(var) * d - n * d.derivative(var), d * d)

    def __call__(self, x, y):
        d = self.den(x, y)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        from .numbers import exact_div

        n = self.num(x, y)
        try:
            return exact_div(n, d)
        except TypeError:
            return n / d

    def reduce(self) -> "RationalFunction":
        return RationalFunction(self.num, self.den)


def _reduce(num: BivariatePolynomial, den: BivariatePolynomial):
    if not num:
        return num, BivariatePolynomial.const(1, num.vars)
    if not den.is_constant():
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = num.exquo(g)
            den = den.exquo(g)
    if den.domain == "QQ":
        c, den = den.content_primitive()
    else:
        c = den.sorted_terms()[0][1]
        den = den.exquo(c)
    num = num.exquo(c)
    return num, den.with_vars(num.vars)


def substitute(p: BivariatePolynomial, sx: RationalFunction, sy: RationalFunction) -> RationalFunction:
    """p(sx, sy) as a reduced rational function."""
    sx = RationalFunction._lift(sx)
    sy = RationalFunction._lift(sy)
    if not p:
        return RationalFunction(BivariatePolynomial({}, sx.vars))
    dx = max(p.degree_in(0), 0)
    dy = max(p.degree_in(1), 0)

    def powers(b, n):
        out = [BivariatePolynomial.const(1, sx.vars)]
        for _ in range(n):
            out.append(out[-1] * b)
        return out

    nx, ddx = powers(sx.num, dx), powers(sx.den, dx)
    ny, ddy = powers(sy.num, dy), powers(sy.den, dy)
    acc = BivariatePolynomial({}, sx.vars)
    for (i, j), c in p.terms.items():
        acc = acc + nx[i] * ddx[dx - i] * ny[j] * ddy[dy - j] * c
    den = ddx[dx] * ddy[dy]
    if not den:
        raise ZeroDivisionError("substitution makes a denominator identically zero")
    return RationalFunction(acc, den)


def compose_rational(f: RationalFunction, sx: RationalFunction, sy: RationalFunction) -> RationalFunction:
    """f(sx, sy) for a rational function f."""
    d = substitute(f.den, sx, sy)
    if not d:
        raise ZeroDivisionError("substitution makes a denominator identically zero")
    return substitute(f.num, sx, sy) / d


__all__ = [
    "RationalFunction",
    "poly_gcd",
    "prs_gcd",
    "poly_resultant",
    "substitute",
    "compose_rational",
    "GaussianRational",
]
