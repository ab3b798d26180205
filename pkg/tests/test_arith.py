from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from expcurve.arith import (
    I,
    BivariatePolynomial,
    GaussianRational,
    ParseError,
    RationalFunction,
    UPoly,
    X,
    Y,
    content_primitive,
    derivative,
    gcd_field,
    parse_polynomial,
    parse_rational,
    poly_gcd,
    poly_resultant,
    prs_gcd,
    resultant,
    squarefree_decomposition,
)

from .conftest import bivariate, upoly


# -- examples -----------------------------------------------------------------


def test_resultant_example():
    R = poly_resultant(X**2 + 1, X - Y, 0)
    assert R == Y**2 + 1


def test_resultant_cusp_against_y():
    # Res_y(y^2 - x^3, y) = -x^3 up to sign convention
    R = poly_resultant(Y**2 - X**3, Y, 1)
    assert R in (X**3, -(X**3))


def test_content_primitive_example():
    p = parse_polynomial("-2*x^5+4*x^3*y^2+4*x^2*y^2+6*x*y^4")
    c, q = content_primitive(p)
    assert c == -2
    assert q == parse_polynomial("x^5-2*x^3*y^2-2*x^2*y^2-3*x*y^4")


def test_gcd_over_q():
    t = UPoly.x()
    assert gcd_field(t**2 - 1, t - 1) == t - 1


def test_gcd_over_gaussian_rationals():
    t = UPoly.x()
    a = (t - I) * (t + 2)
    b = t - I
    assert gcd_field(a, b) == t - I


def test_derivative_example():
    f = parse_rational("x/(x^2+y^2)")
    assert derivative(f, 0) == parse_rational("(y^2-x^2)/(x^2+y^2)^2")


def test_gaussian_arithmetic():
    z = GaussianRational(Fraction(1, 2), 3)
    assert z * z.conjugate() == z.norm()
    assert (z / z) == 1
    assert I * I == -1


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_polynomial("x^^2")
    with pytest.raises(ParseError):
        parse_polynomial("x + (y")


def test_rational_function_reduces():
    r = RationalFunction(X**2 - Y**2, X - Y)
    assert r.is_polynomial()
    assert r.as_polynomial() == X + Y


# -- properties ---------------------------------------------------------------


@given(bivariate(), bivariate(), st.sampled_from([0, 1]))
def test_leibniz_rule(p, q, var):
    assert (p * q).derivative(var) == p.derivative(var) * q + p * q.derivative(var)


@given(bivariate(max_deg=3), bivariate(max_deg=3, nonzero=True))
def test_reduce_is_idempotent(p, q):
    r = RationalFunction(p, q)
    assert r.reduce() == r
    assert r.reduce().reduce() == r.reduce()
    assert r * RationalFunction(q) == RationalFunction(p)


@given(bivariate(nonzero=True))
def test_content_primitive_round_trip(p):
    c, q = p.content_primitive()
    assert q.map_coeffs(lambda v: v * c) == p
    coeffs = [Fraction(v) for v in q.terms.values()]
    assert all(v.denominator == 1 for v in coeffs)
    from math import gcd
    from functools import reduce

    assert reduce(gcd, (v.numerator for v in coeffs)) == 1
    assert q.content_primitive()[1] == q


@given(bivariate(nonzero=True))
def test_serialization_round_trip(p):
    assert BivariatePolynomial.from_json(p.to_json()) == p
    assert parse_polynomial(str(p)) == p


@given(upoly(nonconstant=True), upoly(nonconstant=True), upoly(max_deg=2, nonconstant=True))
def test_resultant_vanishes_with_common_factor(a, b, h):
    assert resultant(a * h, b * h) == 0


@given(upoly(nonconstant=True), upoly(nonconstant=True))
def test_resultant_zero_iff_common_factor(a, b):
    g = gcd_field(a, b)
    assert (resultant(a, b) == 0) == (g.degree > 0)


@given(upoly(max_deg=3, nonconstant=True), upoly(max_deg=3, nonconstant=True))
def test_resultant_multiplicative(a, b):
    c = a + 1
    assert resultant(a * c, b) == resultant(a, b) * resultant(c, b)


@given(upoly(nonconstant=True))
def test_squarefree_decomposition_reassembles(p):
    q = p * p * (p + 1)
    prod = UPoly([q.lc()])
    for f, e in squarefree_decomposition(q):
        prod = prod * f**e
    assert prod == q


@given(bivariate(max_deg=3, nonzero=True), bivariate(max_deg=2, nonzero=True))
def test_poly_gcd_divides(p, q):
    assume(not q.is_constant())
    g = poly_gcd(p * q, q)
    assert g.divides(q)
    assert g.divides(p * q)
    assert g.degree == q.degree


@given(bivariate(max_deg=3), bivariate(max_deg=3), st.sampled_from([0, 1]))
def test_quotient_rule(p, q, var):
    assume(q)
    r = RationalFunction(p, q)
    expect = RationalFunction(p.derivative(var) * q - p * q.derivative(var), q * q)
    assert r.derivative(var) == expect


@given(bivariate(max_deg=3, nonzero=True), bivariate(max_deg=3, nonzero=True), bivariate(max_deg=2, nonzero=True))
def test_sparse_gcd_agrees_with_prs(a, b, h):
    assert poly_gcd(a * h, b * h) == prs_gcd(a * h, b * h)


def test_gcd_over_gaussian_bivariate():
    p = (X - I * Y) * (X + 2)
    q = (X - I * Y) * (Y - 1)
    assert poly_gcd(p, q) == X - I * Y
