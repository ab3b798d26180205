from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from expcurve.arith import RationalFunction, X, Y, parse_polynomial
from expcurve.derivatives import (
    R2,
    NoCurveError,
    SatelliteSpec,
    _mixed,
    curve_polynomial,
    expected_curve_degree,
    mixed_prefactor,
    satellite_prefactor,
    y_prefactor,
)

F2 = parse_polynomial("(x^2-3*y^2)*(x^2+y^2)-2*x*y^2")
F3 = parse_polynomial("6*(x^2-y^2)*(x^2+y^2)^2+3*x^5-6*x^3*y^2-9*x*y^4-2*x^2*y^2")


def sympy_prefactor(a: int, b: int):
    """Independent oracle: differentiate exp(x/(x^2+y^2)) symbolically."""
    x, y = sympy.symbols("x y")
    phi = sympy.exp(x / (x**2 + y**2))
    d = sympy.diff(phi, y, b, x, a) if a and b else sympy.diff(phi, *([x] * a + [y] * b))
    P = sympy.cancel(d / phi * (x**2 + y**2) ** (2 * (a + b)))
    return parse_polynomial(str(sympy.expand(P)).replace("**", "^"))


def test_y_prefactor_examples():
    assert y_prefactor(0).prefactor == 1
    assert y_prefactor(1).prefactor == -2 * X * Y
    assert y_prefactor(2).prefactor == -2 * X * F2


def test_mixed_examples():
    assert mixed_prefactor(1, 0).prefactor == Y**2 - X**2
    assert mixed_prefactor(2, 0).prefactor == parse_polynomial("2*x^5+x^4-4*x^3*y^2-2*x^2*y^2-6*x*y^4+y^4")
    for n in range(1, 5):
        assert mixed_prefactor(0, n).prefactor == y_prefactor(n).prefactor


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4) if 1 <= a + b <= 3])
def test_against_symbolic_oracle(a, b):
    assert mixed_prefactor(a, b).prefactor == sympy_prefactor(a, b)


def test_y_recursion_closed_form():
    # f_{n+1} = (d_y f_n) r^4 - 4n y f_n r^2 - 2xy f_n with r^2 = x^2 + y^2
    for n in range(6):
        f = y_prefactor(n).prefactor
        nxt = f.derivative(1) * R2**2 - 4 * n * Y * f * R2 - 2 * X * Y * f
        assert y_prefactor(n + 1).prefactor == nxt


@pytest.mark.parametrize("a", range(4))
@pytest.mark.parametrize("b", range(4))
def test_mixed_partials_commute(a, b):
    if a + b == 0:
        return
    assert _mixed(a, b, y_first=True) == _mixed(a, b, y_first=False)


@given(st.integers(0, 5), st.integers(0, 5))
def test_degree_and_divisibility(a, b):
    if a + b == 0:
        return
    rec = mixed_prefactor(a, b)
    assert rec.degree == rec.prefactor.degree == 3 * (a + b) - 1
    assert Y.divides(rec.prefactor) == (b % 2 == 1)
    assert X.divides(rec.prefactor) == (a == 0)


def test_golden_curves():
    c2, c3 = curve_polynomial(0, 2), curve_polynomial(0, 3)
    assert c2.F == F2 and c2.degree == 4
    assert c3.F == F3 and c3.degree == 6
    assert curve_polynomial(1, 1).degree == 4


@pytest.mark.parametrize("a,b", [(a, s - a) for s in range(2, 7) for a in range(s + 1)])
def test_curve_normalization(a, b):
    rec = curve_polynomial(a, b, check_irreducible=False)
    F = rec.F
    assert rec.degree == F.degree == expected_curve_degree(a, b) == 3 * (a + b) - 1 - (b % 2) - (a == 0)
    assert F.content_primitive() == (1, F)
    for d in (X, Y, R2):
        assert not d.divides(F)


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (0, 1)])
def test_no_curve(a, b):
    with pytest.raises(NoCurveError):
        curve_polynomial(a, b)


def test_irreducibility_is_advisory():
    rec = curve_polynomial(0, 3)
    assert rec.irreducibility
    assert "certified" not in str(rec.irreducibility).lower() or rec.irreducibility.get("certified") is False


def test_satellite_reproduces_y_prefactor():
    spec = SatelliteSpec(RationalFunction(1), RationalFunction(X, R2), 1, 6)
    gs = satellite_prefactor(spec)
    assert gs[0] == RationalFunction(1)
    for n, g in enumerate(gs):
        assert g == RationalFunction(y_prefactor(n).prefactor, R2 ** (2 * n))


def test_satellite_keeps_g1():
    g = RationalFunction(X + 3, Y**2 + 1)
    gs = satellite_prefactor(SatelliteSpec(g, RationalFunction(X, R2), 0, 3))
    assert gs[0] == g
    assert len(gs) == 3


def test_inverse_square_real_part():
    S = RationalFunction(X**2 - Y**2, R2**2)
    z = complex(2, 1)
    assert abs(float(S(Fraction(2), Fraction(1))) - (1 / z**2).real) < 1e-15
