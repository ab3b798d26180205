"""Prefactor polynomials of the partial derivatives of exp(x/(x^2+y^2)).

With phi = exp(S), S = x/(x^2+y^2) and r2 = x^2+y^2, every mixed partial has
the form d^(a+b) phi / dx^a dy^b = P_ab / r2^(2(a+b)) * phi.  One more
derivative in either variable is a polynomial step on P:

    y-step:  P' = P_y r2^2 - 4N y P r2 - 2xy P
    x-step:  P' = P_x r2^2 - 4N x P r2 + (y^2 - x^2) P

where N = a + b is the current order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .arith import BivariatePolynomial, RationalFunction, X, Y
from .arith.algorithms import is_squarefree
from .arith.upoly import UPoly

R2 = X**2 + Y**2
R2_SQ = R2 * R2


class NoCurveError(ValueError):
    """Raised for (a, b) with a + b < 2."""


class ReduciblePrefactorError(ValueError):
    """Raised when P_ab lacks the expected x / y factors."""


@dataclass(frozen=True)
class PrefactorRecord:
    a: int
    b: int
    prefactor: BivariatePolynomial
    degree: int


@dataclass
class CurveRecord:
    a: int
    b: int
    F: BivariatePolynomial
    degree: int
    genus_formula: int | None = None
    genus_computed: int | None = None
    irreducibility: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "degree": self.degree,
            "polynomial": self.F.to_dict(),
            "genus_formula": self.genus_formula,
            "genus_computed": self.genus_computed,
            "irreducibility": self.irreducibility,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CurveRecord":
        return cls(
            a=d["a"],
            b=d["b"],
            F=BivariatePolynomial.from_dict(d["polynomial"]),
            degree=d["degree"],
            genus_formula=d.get("genus_formula"),
            genus_computed=d.get("genus_computed"),
            irreducibility=d.get("irreducibility", {}),
        )


def y_step(P: BivariatePolynomial, order: int) -> BivariatePolynomial:
    return P.derivative(1) * R2_SQ - P * Y * R2 * (4 * order) - P * X * Y * 2


def x_step(P: BivariatePolynomial, order: int) -> BivariatePolynomial:
    return P.derivative(0) * R2_SQ - P * X * R2 * (4 * order) + P * (Y**2 - X**2)


@lru_cache(maxsize=None)
def _mixed(a: int, b: int, y_first: bool = True) -> BivariatePolynomial:
    if a < 0 or b < 0:
        raise ValueError("derivative orders must be nonnegative")
    if a == 0 and b == 0:
        return BivariatePolynomial.const(1)
    if y_first:
        # y-derivatives first, then x-derivatives
        if a > 0:
            return x_step(_mixed(a - 1, b, True), a - 1 + b)
        return y_step(_mixed(0, b - 1, True), b - 1)
    if b > 0:
        return y_step(_mixed(a, b - 1, False), a + b - 1)
    return x_step(_mixed(a - 1, 0, False), a - 1)


def y_prefactor(n: int) -> PrefactorRecord:
    """f_n with d^n/dy^n phi = f_n / r2^(2n) * phi."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    P = _mixed(0, n)
    return PrefactorRecord(0, n, P, P.degree)


def mixed_prefactor(a: int, b: int, y_first: bool = True) -> PrefactorRecord:
    if (a, b) == (0, 0):
        raise ValueError("mixed_prefactor needs a + b >= 1")
    P = _mixed(a, b, y_first)
    return PrefactorRecord(a, b, P, P.degree)


def expected_curve_degree(a: int, b: int) -> int:
    return 3 * (a + b) - 1 - (b % 2) - (1 if a == 0 else 0)


def curve_polynomial(a: int, b: int, check_irreducible: bool = True) -> CurveRecord:
    """Normalized F_ab: P_ab with the y (b odd) and x (a = 0) factors removed."""
    if a < 0 or b < 0:
        raise ValueError("derivative orders must be nonnegative")
    if a + b < 2:
        raise NoCurveError(f"no curve for (a, b) = ({a}, {b}): need a + b >= 2")
    P = _mixed(a, b)
    F = P
    if b % 2 == 1:
        try:
            F = F.exquo(Y)
        except ArithmeticError as exc:
            raise ReduciblePrefactorError(f"P_{a}{b} is not divisible by y") from exc
    if a == 0:
        try:
            F = F.exquo(X)
        except ArithmeticError as exc:
            raise ReduciblePrefactorError(f"P_{a}{b} is not divisible by x") from exc
    _, F = F.content_primitive()
    for g, name in ((X, "x"), (Y, "y"), (R2, "x^2+y^2")):
        if g.divides(F):
            raise ReduciblePrefactorError(f"F_{a}{b} still divisible by {name}")
    rec = CurveRecord(a, b, F, F.degree)
    if rec.degree != expected_curve_degree(a, b):
        raise ReduciblePrefactorError(f"degree {rec.degree} != expected {expected_curve_degree(a, b)}")
    if check_irreducible:
        rec.irreducibility = irreducibility_heuristic(F)
    return rec


def irreducibility_heuristic(F: BivariatePolynomial, seed: int = 0, trials: int = 2) -> dict:
    """Advisory check only: specialize y at random rationals and look at the
    univariate gcd structure (squarefree, no rational roots of small height)."""
    rng = random.Random(seed)
    results = []
    for _ in range(trials):
        y0 = rng.randint(2, 97) * rng.choice((1, -1))
        p = _specialize_y(F, y0)
        sqfree = is_squarefree(p)
        has_small_root = _has_small_rational_root(p)
        results.append({"y": y0, "squarefree": sqfree, "small_rational_root": has_small_root})
    ok = all(r["squarefree"] and not r["small_rational_root"] for r in results)
    return {"advisory": True, "passed": ok, "trials": results}


def _specialize_y(F: BivariatePolynomial, y0) -> UPoly:
    coeffs: dict[int, object] = {}
    for (i, j), c in F.terms.items():
        coeffs[i] = coeffs.get(i, 0) + c * y0**j
    d = max(coeffs) if coeffs else 0
    return UPoly([coeffs.get(i, 0) for i in range(d + 1)])


def _has_small_rational_root(p: UPoly, bound: int = 20) -> bool:
    from fractions import Fraction

    if p.degree <= 0:
        return False
    if p[0] == 0:
        return True
    for num in range(-bound, bound + 1):
        if num == 0:
            continue
        for den in range(1, bound + 1):
            if p(Fraction(num, den)) == 0:
                return True
    return False


# -- generic (g, S) recursion ---------------------------------------------------


@dataclass(frozen=True)
class SatelliteSpec:
    g: RationalFunction
    S: RationalFunction
    derivation: int = 1  # 0 = d/dx, 1 = d/dy
    order: int = 1

    def __post_init__(self):
        if not self.S.den:
            raise ValueError("S has zero denominator")
        if self.order < 1:
            raise ValueError("order must be >= 1")


def satellite_prefactor(spec: SatelliteSpec) -> list[RationalFunction]:
    """[g_1, ..., g_order] with g_1 = g and g_{n+1} = d g_n + g_n d S.

    With phi = g e^S one has d^n phi = g_{n+1} e^S.
    """
    dS = spec.S.derivative(spec.derivation)
    out = [spec.g]
    while len(out) < spec.order:
        g = out[-1]
        out.append(g.derivative(spec.derivation) + g * dS)
    return out


def exp_inverse_square_spec(order: int) -> SatelliteSpec:
    """The e^{1/z^2} system: S = Re(1/z^2) = (x^2 - y^2)/(x^2 + y^2)^2, derivative in y."""
    S = RationalFunction(X**2 - Y**2, R2_SQ)
    return SatelliteSpec(RationalFunction(1), S, 1, order)


def satellite_curve(g: RationalFunction) -> BivariatePolynomial:
    """Primitive numerator of g with monomial and x^2+y^2 factors stripped."""
    N = g.num
    for f in (X, Y, R2):
        while not N.is_constant() and f.divides(N):
            N = N.exquo(f)
    return N.primitive()


__all__ = [
    "CurveRecord",
    "NoCurveError",
    "PrefactorRecord",
    "ReduciblePrefactorError",
    "SatelliteSpec",
    "curve_polynomial",
    "exp_inverse_square_spec",
    "expected_curve_degree",
    "irreducibility_heuristic",
    "mixed_prefactor",
    "satellite_curve",
    "satellite_prefactor",
    "x_step",
    "y_prefactor",
    "y_step",
]
