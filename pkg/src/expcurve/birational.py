"""Plane birational maps: inversion, pencil slices, binary quartics and the C3 reduction chain."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import BivariatePolynomial, RationalFunction, UPoly, parse_polynomial, parse_rational, substitute
from .arith.numbers import normalize
from .arith.upoly import format_upoly
from .derivatives import R2, curve_polynomial


class BasePointError(ValueError):
    """The map is undefined at the requested point."""


class NotOnCurveError(ValueError):
    pass


class SingularQuarticError(ValueError):
    pass


class IdentityFailedError(ArithmeticError):
    def __init__(self, name: str, residual: BivariatePolynomial):
        super().__init__(f"identity {name!r} failed; residual {residual}")
        self.name = name
        self.residual = residual


# -- rational maps ----------------------------------------------------------------


@dataclass(frozen=True)
class RationalMap:
    """(x, y) -> (sx(x, y), sy(x, y)); ``text`` keeps the component strings."""

    sx: RationalFunction
    sy: RationalFunction
    base_points: tuple = ()
    text: tuple = ()

    @classmethod
    def parse(cls, sx: str, sy: str, vars=("x", "y"), base_points=()) -> "RationalMap":
        return cls(parse_rational(sx, vars), parse_rational(sy, vars), tuple(base_points), (sx, sy))

    def __call__(self, point):
        x, y = point
        try:
            return (normalize(self.sx(x, y)), normalize(self.sy(x, y)))
        except ZeroDivisionError as exc:
            raise BasePointError(f"base point at {_fmt_point(point)}") from exc

    def compose(self, inner: "RationalMap") -> "RationalMap":
        """self after inner."""
        from .arith import compose_rational

        return RationalMap(
            compose_rational(self.sx, inner.sx, inner.sy),
            compose_rational(self.sy, inner.sx, inner.sy),
        )

    def pullback(self, F: BivariatePolynomial) -> RationalFunction:
        """F(sx, sy)."""
        return substitute(F, self.sx, self.sy)

    def to_dict(self) -> dict:
        sx, sy = self.text or (str(self.sx), str(self.sy))
        return {"x": sx, "y": sy}


INVERSION = RationalMap.parse("x/(x^2+y^2)", "-y/(x^2+y^2)", base_points=[(0, 0)])


def _fmt(c) -> str:
    return str(Fraction(c)) if not isinstance(c, str) else c


def _fmt_point(p) -> str:
    return "(" + ", ".join(_fmt(c) for c in p) + ")"


def invert_curve(F: BivariatePolynomial) -> BivariatePolynomial:
    """Primitive numerator of F(x/(x^2+y^2), -y/(x^2+y^2))."""
    if not F:
        raise ValueError("zero polynomial")
    if R2.divides(F):
        raise ValueError("curve contains the factor x^2+y^2")
    G = INVERSION.pullback(F.with_vars(("x", "y"))).num
    while not G.is_constant() and R2.divides(G):
        G = G.exquo(R2)
    return G.primitive()


# -- pencil of lines through the origin ---------------------------------------------


def _m_poly(p: UPoly) -> BivariatePolynomial:
    return BivariatePolynomial.from_univariate(p, 0, ("m", "n"))


@dataclass(frozen=True)
class PencilSlice:
    """F(x, m*x) = sign * x^k * (c_j x^j + ... + c_0); coefficients[i] = c_i."""

    k: int
    sign: int
    coefficients: tuple

    def __getitem__(self, i) -> UPoly:
        return self.coefficients[i]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def quadratic(self) -> tuple[UPoly, UPoly, UPoly]:
        """(A, B, C) with the residual factor A x^2 + B x + C."""
        if self.degree != 2:
            raise ValueError(f"slice has degree {self.degree}, not 2")
        c0, c1, c2 = self.coefficients
        return c2, c1, c0

    def describe(self) -> str:
        s = "-" if self.sign < 0 else ""
        parts = [f"({format_upoly(c, 'm')})*x^{i}" for i, c in enumerate(self.coefficients) if c]
        return f"{s}x^{self.k}*(" + " + ".join(reversed(parts)) + ")"


def slice_pencil(F: BivariatePolynomial) -> PencilSlice:
    """Restrict F to the line y = m x and strip the trivial x-power.

    The sign is chosen so that c_0 has a positive leading coefficient in m.
    """
    if F.constant_term():
        raise ValueError("the origin is not on the curve")
    by_degree: dict[int, dict[int, object]] = {}
    for (i, j), c in F.terms.items():
        col = by_degree.setdefault(i + j, {})
        col[j] = col.get(j, 0) + c
    polys = {}
    for s, col in by_degree.items():
        p = UPoly([col.get(j, 0) for j in range(max(col) + 1)])
        if p:
            polys[s] = p
    k = min(polys)
    top = max(polys)
    coeffs = [polys.get(s, UPoly()) for s in range(k, top + 1)]
    sign = 1 if coeffs[0].lc() > 0 else -1
    if sign < 0:
        coeffs = [-c for c in coeffs]
    return PencilSlice(k, sign, tuple(coeffs))


@dataclass(frozen=True)
class SliceDiscriminant:
    polynomial: UPoly
    content: object
    circle_power: int
    remaining: UPoly
    degenerate: bool = False

    def describe(self) -> str:
        if self.degenerate:
            return "0"
        return f"{self.content}*(m^2 + 1)^{self.circle_power}*({format_upoly(self.remaining, 'm')})"


def slice_discriminant(sl: PencilSlice) -> SliceDiscriminant:
    """B^2 - 4AC split as content * (m^2+1)^e * remaining."""
    A, B, C = sl.quadratic()
    D = B * B - A * C * 4
    if not D:
        return SliceDiscriminant(D, 0, 0, UPoly(), degenerate=True)
    prim = D.primitive_integer()
    content = normalize(Fraction(D.lc()) / Fraction(prim.lc()))
    circle = UPoly([1, 0, 1])
    e = 0
    rest = prim
    while rest.degree >= 2:
        q, r = rest.divmod(circle)
        if r:
            break
        rest, e = q, e + 1
    return SliceDiscriminant(D, content, e, rest)


# -- binary quartics ------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryQuartic:
    """a m^4 + b m^3 + c m^2 + d m + e."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self):
        for name in "abcde":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_upoly(cls, p: UPoly) -> "BinaryQuartic":
        if p.degree > 4:
            raise ValueError("degree exceeds 4")
        return cls(*(Fraction(p[i]) for i in (4, 3, 2, 1, 0)))


@dataclass(frozen=True)
class QuarticInvariants:
    I: Fraction
    J: Fraction
    j: Fraction


def quartic_invariants(q: BinaryQuartic) -> QuarticInvariants:
    """I, J and the j-invariant of the Jacobian y^2 = x^3 - 27 I x - 27 J."""
    a, b, c, d, e = q.a, q.b, q.c, q.d, q.e
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c**3
    A, B = -27 * I, -27 * J
    denom = 4 * A**3 + 27 * B**2
    if denom == 0:
        raise SingularQuarticError("singular quartic: 4I^3 - J^2 = 0")
    j = 1728 * 4 * A**3 / denom
    return QuarticInvariants(normalize(I), normalize(J), normalize(j))


# -- C2 parametrization -------------------------------------------------------------


@dataclass(frozen=True)
class Parametrization:
    x: RationalFunction
    y: RationalFunction
    residual: RationalFunction

    @property
    def verified(self) -> bool:
        return not self.residual

    def __call__(self, m):
        return self.x(m, 0), self.y(m, 0)


def parametrize_c2() -> Parametrization:
    """x(m) from the linear slice of F2, y = m x; checked by exact substitution."""
    F2 = curve_polynomial(0, 2, check_irreducible=False).F
    sl = slice_pencil(F2)
    if sl.degree != 1:
        raise ArithmeticError("the F2 slice is not linear")
    c0, c1 = sl.coefficients
    x = RationalFunction(-_m_poly(c0), _m_poly(c1))
    m = RationalFunction(_m_poly(UPoly([0, 1])))
    y = m * x
    return Parametrization(x, y, substitute(F2, x, y))


# -- the C3 -> Q -> E chain ---------------------------------------------------------------


@dataclass
class Identity:
    name: str
    lhs: str
    rhs: str
    residual: BivariatePolynomial

    @property
    def passed(self) -> bool:
        return not self.residual

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "residual": str(self.residual), "pass": self.passed}


@dataclass
class Stage:
    name: str
    vars: tuple
    equation: BivariatePolynomial
    to_next: RationalMap | None = None
    from_next: RationalMap | None = None

    def contains(self, point) -> bool:
        return self.equation(*point) == 0

    def to_dict(self) -> dict:
        d = {"name": self.name, "vars": list(self.vars), "polynomial": str(self.equation)}
        if self.to_next is not None:
            d["map_to_next"] = self.to_next.to_dict()
        if self.from_next is not None:
            d["map_from_next"] = self.from_next.to_dict()
        return d


@dataclass
class PipelineRecord:
    stages: list
    weierstrass: tuple
    identities: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.identities)

    def stage(self, name: str) -> Stage:
        for s in self.stages:
            if s.name == name:
                return s
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "stages": [s.to_dict() for s in self.stages],
            "weierstrass": list(self.weierstrass),
            "identities": [i.to_dict() for i in self.identities],
            "pass": self.passed,
        }


# declarative description of the chain: (name, vars, equation, map to next, map back)
C3_CHAIN = (
    ("C3", ("x", "y"), None, ("x/(x^2+y^2)", "-y/(x^2+y^2)"), ("x/(x^2+y^2)", "-y/(x^2+y^2)")),
    ("G3", ("x", "y"), None, ("x", "y*(2*x^2+9*x+6)/x"), ("x", "x*y/(2*x^2+9*x+6)")),
    ("Q", ("x", "y"), "y^2 - (6*x^3+39*x^2+72*x+36)", ("6*x+13", "6*y"), ("(u-13)/6", "v/6")),
    ("E", ("u", "v"), "v^2 - (u^3-75*u+74)", None, None),
)

STAGE_ORDER = tuple(s[0] for s in C3_CHAIN)


def _identity(name, lhs: RationalFunction, rhs: RationalFunction, lhs_s: str, rhs_s: str) -> Identity:
    diff = lhs - rhs
    return Identity(name, lhs_s, rhs_s, diff.num)


def c3_pipeline(strict: bool = True) -> PipelineRecord:
    """Reduce the sextic C3 to v^2 = u^3 - 75u + 74, checking each step exactly."""
    F3 = curve_polynomial(0, 3, check_irreducible=False).F
    G3 = invert_curve(F3)
    equations = {"C3": F3, "G3": G3}
    stages = []
    for idx, (name, vars, eq, fwd, back) in enumerate(C3_CHAIN):
        E = equations.get(name) or parse_polynomial(eq, vars)
        nxt_vars = C3_CHAIN[idx + 1][1] if idx + 1 < len(C3_CHAIN) else None
        to_next = RationalMap.parse(*fwd, vars=vars) if fwd else None
        from_next = RationalMap.parse(*back, vars=nxt_vars) if back else None
        stages.append(Stage(name, vars, E, to_next, from_next))

    inv = INVERSION
    r2 = RationalFunction(R2)
    ids = []
    ids.append(_identity("inversion C3 -> G3", inv.pullback(F3), RationalFunction(G3) / r2**4,
                         "F3(x/(x^2+y^2), -y/(x^2+y^2))", "G3/(x^2+y^2)^4"))
    ids.append(_identity("involution G3 -> C3", inv.pullback(G3), RationalFunction(F3) / r2**4,
                         "G3(x/(x^2+y^2), -y/(x^2+y^2))", "F3/(x^2+y^2)^4"))
    x, y = RationalFunction.gens()
    q = 2 * x**2 + 9 * x + 6
    ids.append(_identity("G3 solved for y^2", RationalFunction(G3), 3 * x**2 * (x + 2) - y**2 * q,
                         "G3", "3x^2(x+2) - y^2(2x^2+9x+6)"))
    cubic = parse_rational("6*x^3+39*x^2+72*x+36")
    ids.append(_identity("cubic factorization", cubic, 3 * (x + 2) * q, "6x^3+39x^2+72x+36", "3(x+2)(2x^2+9x+6)"))
    back = stages[1].from_next
    ids.append(_identity("G3 on the Q chart", back.pullback(G3), x**2 * (cubic - y**2) / q,
                         "G3(x, x y'/(2x^2+9x+6))", "x^2 (6x^3+39x^2+72x+36 - y'^2)/(2x^2+9x+6)"))
    to_e = stages[2].to_next
    Eq = stages[3].equation
    ids.append(_identity("Q -> E scaling", to_e.pullback(Eq), 36 * RationalFunction(stages[2].equation),
                         "(v^2 - u^3 + 75u - 74)(6x+13, 6y')", "36 (y'^2 - 6x^3 - 39x^2 - 72x - 36)"))
    u, v = RationalFunction.gens(("u", "v"))
    closing_x = parse_rational("(u-13)/6", ("u", "v"))
    closing_y = parse_rational("(v/2)*(u-13)/(u^2+u-74)", ("u", "v"))
    rhs = (u - 13) ** 2 * (u**3 - 75 * u + 74 - v**2) / (72 * (u**2 + u - 74))
    ids.append(_identity("closing identity", substitute(G3, closing_x, closing_y), rhs,
                         "G3((u-13)/6, (v/2)(u-13)/(u^2+u-74))", "(u-13)^2(u^3-75u+74-v^2)/(72(u^2+u-74))"))
    rec = PipelineRecord(stages, (0, 0, 0, -75, 74), ids)
    if strict:
        for i in ids:
            if not i.passed:
                raise IdentityFailedError(i.name, i.residual)
    return rec


def transport_point(P, stage_from: str, stage_to: str, record: PipelineRecord | None = None) -> list:
    """Carry P along the chain; returns [(stage, point), ...] including both ends.

    Every image is checked on its stage's curve.
    """
    rec = record or c3_pipeline()
    i, j = STAGE_ORDER.index(stage_from), STAGE_ORDER.index(stage_to)
    point = tuple(normalize(Fraction(c)) for c in P)
    if not rec.stages[i].contains(point):
        raise NotOnCurveError(f"{_fmt_point(point)} is not on {stage_from}")
    path = [(stage_from, point)]
    step = 1 if j >= i else -1
    while i != j:
        if step > 0:
            f = rec.stages[i].to_next
        else:
            f = rec.stages[i - 1].from_next
        if (point[0], point[1]) in f.base_points:
            raise BasePointError(f"base point at {_fmt_point(point)}")
        point = f(point)
        i += step
        if not rec.stages[i].contains(point):
            raise ArithmeticError(f"image {_fmt_point(point)} is not on {STAGE_ORDER[i]}")
        path.append((STAGE_ORDER[i], point))
    return path


__all__ = [
    "BasePointError",
    "BinaryQuartic",
    "INVERSION",
    "IdentityFailedError",
    "NotOnCurveError",
    "Parametrization",
    "PencilSlice",
    "PipelineRecord",
    "QuarticInvariants",
    "RationalMap",
    "SingularQuarticError",
    "SliceDiscriminant",
    "c3_pipeline",
    "invert_curve",
    "parametrize_c2",
    "quartic_invariants",
    "slice_discriminant",
    "slice_pencil",
    "transport_point",
]
