"""Sparse bivariate polynomials with exact coefficients in Q or Q(i)."""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd as igcd

from .numbers import GaussianRational, format_coeff, normalize, parse_coeff
from .upoly import UPoly

Monomial = tuple[int, int]


def _grlex_key(m: Monomial):
    # descending total degree, then descending x-degree
    return (-(m[0] + m[1]), -m[0])


class BivariatePolynomial:
    """Immutable sparse polynomial sum c_ij x^i y^j.

    ``vars`` only names the two slots for printing and serialization;
    arithmetic is positional.
    """

    __slots__ = ("terms", "vars", "_hash")

    def __init__(self, terms=None, vars=("x", "y")):
        t = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                c = normalize(c)
                if c:
                    t[(int(i), int(j))] = c
        self.terms: dict[Monomial, object] = t
        self.vars = tuple(vars)
        self._hash = None

    # -- constructors ----------------------------------------------------
    @classmethod
    def const(cls, c, vars=("x", "y")):
        return cls({(0, 0): c}, vars)

    @classmethod
    def gens(cls, vars=("x", "y")):
        return cls({(1, 0): 1}, vars), cls({(0, 1): 1}, vars)

    @classmethod
    def parse(cls, text: str, vars=("x", "y")):
        from .parse import parse_polynomial

        return parse_polynomial(text, vars)

    def with_vars(self, vars) -> "BivariatePolynomial":
        return BivariatePolynomial(self.terms, vars)

    # -- basic properties --------------------------------------------------
    @property
    def domain(self) -> str:
        return "QQ(i)" if any(isinstance(c, GaussianRational) for c in self.terms.values()) else "QQ"

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0, 0), 0)

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(m[var] for m in self.terms)

    def order(self) -> int:
        """Lowest total degree of a term (multiplicity at the origin)."""
        if not self.terms:
            raise ValueError("order of zero polynomial")
        return min(i + j for i, j in self.terms)

    def homogeneous_part(self, d: int) -> "BivariatePolynomial":
        return BivariatePolynomial({m: c for m, c in self.terms.items() if m[0] + m[1] == d}, self.vars)

    def leading_form(self) -> "BivariatePolynomial":
        return self.homogeneous_part(self.degree)

    def lowest_form(self) -> "BivariatePolynomial":
        return self.homogeneous_part(self.order())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), 0)

    # -- equality ---------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.terms == ({(0, 0): normalize(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        return BivariatePolynomial.const(other, self.vars)

    def __add__(self, other):
        o = self._lift(other)
        t = dict(self.terms)
        for m, c in o.terms.items():
            t[m] = t.get(m, 0) + c
        return BivariatePolynomial(t, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({m: -c for m, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, BivariatePolynomial):
            if not other:
                return BivariatePolynomial({}, self.vars)
            return BivariatePolynomial({m: c * other for m, c in self.terms.items()}, self.vars)
        t: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, 0) + c1 * c2
        return BivariatePolynomial(t, self.vars)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = BivariatePolynomial.const(1, self.vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exquo(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        """Exact division; raises ArithmeticError when other does not divide self."""
        if not isinstance(other, BivariatePolynomial):
            from .numbers import exact_div

            return BivariatePolynomial({m: exact_div(c, other) for m, c in self.terms.items()}, self.vars)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return self
        if other.is_constant():
            return self.exquo(other.constant_term())
        q = self.to_upoly(1).exquo(other.to_upoly(1))
        return BivariatePolynomial.from_upoly(q, 1, self.vars)

    def divides(self, other: "BivariatePolynomial") -> bool:
        try:
            other.exquo(self)
        except ArithmeticError:
            return False
        return True

    # -- views ----------------------------------------------------------------------
    def to_upoly(self, var: int = 1) -> UPoly:
        """View as a polynomial in ``var`` with UPoly coefficients in the other variable."""
        other = 1 - var
        rows: dict[int, dict[int, object]] = {}
        for m, c in self.terms.items():
            rows.setdefault(m[var], {})[m[other]] = c
        if not rows:
            return UPoly()
        top = max(rows)
        out = []
        for k in range(top + 1):
            r = rows.get(k)
            if not r:
                out.append(UPoly())
            else:
                d = max(r)
                out.append(UPoly([r.get(i, 0) for i in range(d + 1)]))
        return UPoly(out)

    @classmethod
    def from_upoly(cls, p: UPoly, var: int = 1, vars=("x", "y")):
        t = {}
        for k, cp in enumerate(p.c):
            if isinstance(cp, UPoly):
                for i, c in enumerate(cp.c):
                    if c:
                        t[(i, k) if var == 1 else (k, i)] = c
            elif cp:
                t[(0, k) if var == 1 else (k, 0)] = cp
        return cls(t, vars)

    def univariate(self, var: int) -> UPoly:
        """Coefficient list in ``var``; the polynomial must not involve the other variable."""
        if any(m[1 - var] for m in self.terms):
            raise ValueError("polynomial is not univariate")
        d = self.degree_in(var)
        return UPoly([self.terms.get((k, 0) if var == 0 else (0, k), 0) for k in range(d + 1)])

    @classmethod
    def from_univariate(cls, p: UPoly, var: int = 0, vars=("x", "y")):
        return cls({((k, 0) if var == 0 else (0, k)): c for k, c in enumerate(p.c)}, vars)

    # -- calculus / substitution -------------------------------------------------
    def derivative(self, var: int) -> "BivariatePolynomial":
        t = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[var]
            if e:
                t[(i - 1, j) if var == 0 else (i, j - 1)] = c * e
        return BivariatePolynomial(t, self.vars)

    def __call__(self, x, y):
        """Evaluate at (x, y); exact if the inputs are exact.  Horner in y."""
        rows: dict[int, dict[int, object]] = {}
        for (i, j), c in self.terms.items():
            rows.setdefault(j, {})[i] = c
        acc = 0
        for j in range(self.degree_in(1), -1, -1):
            r = rows.get(j)
            row = 0
            if r:
                for i in range(max(r), -1, -1):
                    row = row * x + r.get(i, 0)
            acc = acc * y + row
        return acc

    def compose(self, px: "BivariatePolynomial", py: "BivariatePolynomial") -> "BivariatePolynomial":
        """self(px, py) for polynomial substitutions."""
        dx = self.degree_in(0)
        dy = self.degree_in(1)
        powx = [BivariatePolynomial.const(1, px.vars)]
        for _ in range(dx):
            powx.append(powx[-1] * px)
        powy = [BivariatePolynomial.const(1, py.vars)]
        for _ in range(dy):
            powy.append(powy[-1] * py)
        acc = BivariatePolynomial({}, px.vars)
        for (i, j), c in self.terms.items():
            acc = acc + powx[i] * powy[j] * c
        return acc

    def translate(self, a, b) -> "BivariatePolynomial":
        """F(x + a, y + b)."""
        x, y = BivariatePolynomial.gens(self.vars)
        return self.compose(x + a, y + b)

    def linear_change(self, m00, m01, m10, m11) -> "BivariatePolynomial":
        """F(m00 x + m01 y, m10 x + m11 y)."""
        x, y = BivariatePolynomial.gens(self.vars)
        return self.compose(x * m00 + y * m01, x * m10 + y * m11)

    def swap(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(j, i): c for (i, j), c in self.terms.items()}, self.vars)

    def conjugate(self) -> "BivariatePolynomial":
        return BivariatePolynomial(
            {m: (c.conjugate() if isinstance(c, GaussianRational) else c) for m, c in self.terms.items()},
            self.vars,
        )

    def map_coeffs(self, f) -> "BivariatePolynomial":
        return BivariatePolynomial({m: f(c) for m, c in self.terms.items()}, self.vars)

    # -- normalization -----------------------------------------------------------
    def content_primitive(self):
        """(content, primitive) with primitive integral, gcd 1, positive sign on
        the highest pure power of x (falling back to the graded-lex leading term)."""
        if not self.terms:
            raise ValueError("content of zero polynomial")
        if self.domain != "QQ":
            raise ValueError("content_primitive needs rational coefficients")
        num = 0
        den = 1
        for c in self.terms.values():
            f = Fraction(c)
            num = igcd(num, f.numerator)
            den = den * f.denominator // igcd(den, f.denominator)
        content = Fraction(num, den)
        if Fraction(self._sign_coeff()) < 0:
            content = -content
        prim = BivariatePolynomial({m: Fraction(c) / content for m, c in self.terms.items()}, self.vars)
        return normalize(content), prim

    def _sign_coeff(self):
        pure_x = [m for m in self.terms if m[1] == 0]
        if pure_x:
            return self.terms[max(pure_x)]
        return self.sorted_terms()[0][1]

    def primitive(self) -> "BivariatePolynomial":
        return self.content_primitive()[1]

    # -- printing / serialization -----------------------------------------------
    def __repr__(self):
        return f"BivariatePolynomial({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        vx, vy = self.vars
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append(vx if i == 1 else f"{vx}^{i}")
            if j:
                mono.append(vy if j == 1 else f"{vy}^{j}")
            cs = format_coeff(c)
            if isinstance(c, GaussianRational):
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(mono))
            elif cs == "-1":
                parts.append("-" + "*".join(mono))
            else:
                parts.append(cs + "*" + "*".join(mono))
        out = parts[0]
        for s in parts[1:]:
            out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
        return out

    def to_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [[i, j, format_coeff(c)] for (i, j), c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "BivariatePolynomial":
        return cls({(int(i), int(j)): parse_coeff(c) for i, j, c in d["terms"]}, tuple(d.get("vars", ("x", "y"))))

    @classmethod
    def from_json(cls, s: str) -> "BivariatePolynomial":
        return cls.from_dict(json.loads(s))


Poly = BivariatePolynomial
X, Y = BivariatePolynomial.gens()
