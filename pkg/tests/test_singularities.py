from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from expcurve.arith import X, Y, parse_polynomial
from expcurve.derivatives import curve_polynomial
from expcurve.singularities import (
    GENUS_TABLE,
    NonIsolatedSingularityError,
    NotOnCurveError,
    ReducibilityDetectedError,
    certify_singular_locus,
    circle_point_check,
    delta_invariant,
    genus,
    genus_cn,
    genus_formula,
    milnor_number,
    newton_puiseux,
)

F2 = curve_polynomial(0, 2, check_irreducible=False).F
F3 = curve_polynomial(0, 3, check_irreducible=False).F


def kinds(branches):
    out = {}
    for b in branches:
        out[b.kind] = out.get(b.kind, 0) + 1
    return out


# -- examples -----------------------------------------------------------------


def test_cusp_branch():
    (b,) = newton_puiseux(Y**2 - X**3)
    assert b.ramification_index == 2
    assert b.terms[0][0] == pytest.approx(1.5)
    assert abs(complex(b.terms[0][1])) == pytest.approx(1.0)


def test_c3_origin_branches():
    bs = newton_puiseux(F3)
    assert kinds(bs) == {"smooth": 2, "cuspidal": 1}
    assert {b.tangent_label() for b in bs if b.smooth} == {"vertical"}
    assert [b.tangent_label() for b in bs if not b.smooth] == ["horizontal"]


def test_c2_origin_branches():
    assert kinds(newton_puiseux(F2)) == {"smooth": 1, "cuspidal": 1}


def test_milnor_examples():
    assert milnor_number(Y**2 - X**3).mu == 2
    assert milnor_number(F2).mu == 5
    # 2 delta - r + 1 with delta = 7 and r = 3
    assert milnor_number(F3).mu == 12


def test_delta_examples():
    r3 = delta_invariant(F3)
    assert (r3.delta, r3.r, r3.mu, r3.multiplicity) == (7, 3, 12, 4)
    r2 = delta_invariant(F2)
    assert (r2.delta, r2.r, r2.mu) == (3, 2, 5)
    node = delta_invariant(X * Y + X**3 + Y**3)
    assert (node.delta, node.r, node.ordinary) == (1, 2, True)


def test_non_isolated_rejected():
    with pytest.raises(NonIsolatedSingularityError):
        milnor_number(Y**2 * (X + Y**3))


def test_circle_points_c3():
    reps = circle_point_check(F3)
    assert len(reps) == 2
    assert all(r.multiplicity == 2 and r.ordinary and r.delta == 1 for r in reps)


def test_circle_points_of_circle_are_smooth():
    reps = circle_point_check(X**2 + Y**2 - 1)
    assert all(r.multiplicity == 1 and r.delta == 0 for r in reps)


def test_circle_points_absent():
    with pytest.raises(NotOnCurveError):
        circle_point_check(X**2 - Y**2 - 1)


@pytest.mark.parametrize("a,b", [(a, s - a) for s in (2, 3) for a in range(s + 1)])
def test_circle_points_ordinary(a, b):
    F = curve_polynomial(a, b, check_irreducible=False).F
    for r in circle_point_check(F):
        assert r.multiplicity == a + b - 1 or r.multiplicity == a + b
        assert r.ordinary
        assert r.delta == r.multiplicity * (r.multiplicity - 1) // 2


def test_singular_locus_c3():
    loc = certify_singular_locus(F3)
    assert [p.label for p in loc.affine] == ["origin"]
    sing_inf = [p for p in loc.infinity if getattr(p, "germ", None) is not None]
    assert len(sing_inf) == 2
    # the smooth directions (1 : 1 : 0) and (1 : -1 : 0) share one factor
    smooth = [p.label for p in loc.infinity if getattr(p, "singular", True) is False]
    assert smooth == ["(t^2 - 1 = 0 : 1 : 0)"]


def test_singular_locus_c2():
    loc = certify_singular_locus(F2)
    assert [p.label for p in loc.affine] == ["origin"]
    assert all(getattr(p, "singular", True) is False for p in loc.infinity)


def test_smooth_conic_has_no_singular_points():
    assert certify_singular_locus(X**2 + Y**2 - 1).singular_points == []


@pytest.mark.parametrize("n,g", [(2, 0), (3, 1), (4, 4)])
def test_genus_small(n, g):
    assert genus(curve_polynomial(0, n, check_irreducible=False).F).genus == g


def test_genus_c3_breakdown():
    rep = genus(F3)
    assert rep.degree == 6
    assert sorted(r.delta for r in rep.reports) == [1, 1, 7]
    assert rep.genus == (6 - 1) * (6 - 2) // 2 - 9 == 1


def test_reducible_curve_detected():
    with pytest.raises((ReducibilityDetectedError, NonIsolatedSingularityError, ArithmeticError)):
        genus((X**2 + Y**2 - 1) * (X**2 + Y**2 - 4) * (X - 3))


# -- formulas -----------------------------------------------------------------


def test_formula_examples():
    assert genus_formula(0, 3) == 1
    assert genus_formula(5, 5) == 88
    assert genus_formula(2, 2) == 10
    assert genus_formula(0, 2) == 0
    assert genus_formula(3, 2) == 18


def test_formula_matches_whole_table():
    assert len(GENUS_TABLE) == 33
    assert {k: genus_formula(*k) for k in GENUS_TABLE} == GENUS_TABLE


def test_cn_formula_variants():
    for n in range(2, 6):
        assert genus_cn(n) == GENUS_TABLE[(0, n)]
    assert genus_cn(3, "printed") == 7


# -- properties ---------------------------------------------------------------


@settings(max_examples=25)
@given(st.integers(2, 7), st.integers(2, 7))
def test_brieskorn_pham(p, q):
    """x^p - y^q: mu = (p-1)(q-1) and r = gcd(p, q)."""
    rep = delta_invariant(X**p - Y**q)
    assert rep.mu == (p - 1) * (q - 1)
    assert rep.r == gcd(p, q)
    assert 2 * rep.delta == rep.mu + rep.r - 1


@settings(max_examples=15)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=4, unique=True), st.integers(1, 3))
def test_ordinary_point(slopes, k):
    """Distinct lines through the origin plus higher terms give an ordinary point."""
    F = X**5 + k * Y**5 + X**4 * Y
    G = 1
    for s in slopes:
        G = G * (Y - s * X)
    F = G + F
    rep = delta_invariant(F)
    m = len(slopes)
    assert rep.ordinary and rep.multiplicity == m
    assert rep.delta == m * (m - 1) // 2


@pytest.mark.parametrize("a,b", [(a, s - a) for s in (2, 3, 4) for a in range(s + 1)])
def test_pipeline_genus_nonnegative_and_matches(a, b):
    g = genus(curve_polynomial(a, b, check_irreducible=False).F, 0, a, b)
    assert g.genus >= 0
    assert g.genus == GENUS_TABLE[(a, b)]
    for r in g.reports:
        assert 2 * r.delta == r.mu + r.r - 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_origin_branch_counts(n):
    bs = newton_puiseux(curve_polynomial(0, n, check_irreducible=False).F)
    assert kinds(bs) == {"smooth": n - 1, "cuspidal": n // 2}
