from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from expcurve.arith import UPoly, X, Y, parse_polynomial
from expcurve.birational import (
    INVERSION,
    BasePointError,
    BinaryQuartic,
    NotOnCurveError,
    SingularQuarticError,
    c3_pipeline,
    invert_curve,
    parametrize_c2,
    quartic_invariants,
    slice_discriminant,
    slice_pencil,
    transport_point,
)
from expcurve.derivatives import R2, curve_polynomial

F2 = curve_polynomial(0, 2, check_irreducible=False).F
F3 = curve_polynomial(0, 3, check_irreducible=False).F
G3 = parse_polynomial("-2*x^2*y^2+3*x^3-9*x*y^2+6*x^2-6*y^2")
M = UPoly.x()


def same_curve(A, B):
    return A.primitive() == B.primitive()


def test_invert_examples():
    assert same_curve(invert_curve(F3), G3)
    assert same_curve(invert_curve(F2), parse_polynomial("x^2-3*y^2-2*x*y^2"))
    assert same_curve(invert_curve(G3), F3)


def test_invert_rejects_circle_factor():
    with pytest.raises(ValueError):
        invert_curve(R2 * (X - 1))


def test_inversion_is_involution_on_points():
    P = (Fraction(3, 5), Fraction(-2, 7))
    assert INVERSION(INVERSION(P)) == P
    with pytest.raises(BasePointError):
        INVERSION((0, 0))


@settings(max_examples=20)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-5, 5)), min_size=1, max_size=5))
def test_invert_involution_property(terms):
    F = parse_polynomial("0")
    for i, j, c in terms:
        if i + j >= 1 and c:
            F = F + c * X**i * Y**j
    if F.is_zero() or F.is_constant() or R2.divides(F):
        return
    assert same_curve(invert_curve(invert_curve(F)), F)


def test_slice_c3():
    sl = slice_pencil(F3)
    assert sl.k == 4
    A, B, C = sl.quadratic()
    assert {A * sl.sign, A * -sl.sign} & {UPoly([6]) * (M - 1) * (M + 1) * (M * M + 1) ** 2}
    assert B * B == (UPoly([3]) * (3 * M * M - 1) * (M * M + 1)) ** 2
    assert C in (2 * M * M, -2 * M * M)


def test_slice_cusp():
    sl = slice_pencil(Y**2 - X**3)
    assert sl.k == 2
    assert sl.degree == 1


def test_slice_discriminant_c3():
    sd = slice_discriminant(slice_pencil(F3))
    assert sd.polynomial == UPoly([3]) * (M * M + 1) ** 2 * (11 * M**4 - 2 * M**2 + 3)
    assert sd.circle_power == 2
    assert sd.remaining.monic() == (11 * M**4 - 2 * M**2 + 3).monic()


def test_quartic_invariants():
    inv = quartic_invariants(BinaryQuartic(11, 0, -2, 0, 3))
    assert (inv.I, inv.J, inv.j) == (400, -4736, Fraction(62500, 33))
    inv = quartic_invariants(BinaryQuartic(1, 0, 0, 0, 1))
    assert (inv.I, inv.J, inv.j) == (12, 0, 1728)
    with pytest.raises(SingularQuarticError):
        quartic_invariants(BinaryQuartic(1, 0, 1, 0, 0))


def test_pipeline():
    rec = c3_pipeline()
    assert rec.passed and rec.identities
    assert tuple(rec.weierstrass) == (0, 0, 0, -75, 74)
    assert rec.stage("Q").equation == parse_polynomial("y^2-(6*x^3+39*x^2+72*x+36)")
    assert same_curve(rec.stage("G3").equation, G3)
    closing = [i for i in rec.identities if i.name == "closing identity"]
    assert closing and closing[0].passed


def test_transport_examples():
    path = dict(transport_point((1, 0), "E", "C3"))
    assert path["Q"] == (-2, 0) and path["C3"] == (Fraction(-1, 2), 0)
    path = dict(transport_point((-5, 18), "E", "C3"))
    assert path["Q"] == (-3, 3)
    assert path["C3"] == (Fraction(-1, 6), Fraction(-1, 6))
    # both sign choices lie on C3 since F3 is even in y
    assert F3(Fraction(-1, 6), Fraction(1, 6)) == 0


def test_transport_base_point():
    with pytest.raises((BasePointError, ZeroDivisionError)):
        transport_point((13, 36), "E", "C3")


def test_transport_off_curve():
    with pytest.raises(NotOnCurveError):
        transport_point((0, 0), "E", "C3")


def test_transport_round_trip():
    P = transport_point((-5, 18), "E", "C3")[-1][1]
    back = dict(transport_point(P, "C3", "E"))
    assert back["E"] in {(-5, 18), (-5, -18)}


def test_parametrization():
    p = parametrize_c2()
    assert p.verified
    for m in (Fraction(1, 3), Fraction(2), Fraction(-5, 7)):
        assert p(m)[0] == 2 * m * m / ((1 + m * m) * (1 - 3 * m * m))
        assert p(m)[1] == m * p(m)[0]
    x1, y1 = p(1)
    assert (x1, y1) == (Fraction(-1, 2), Fraction(-1, 2))
    assert F2(x1, y1) == 0
    assert p(0) == (0, 0)
