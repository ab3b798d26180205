from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from expcurve.elliptic import (
    INFINITY,
    NotTwistsError,
    OffCurveError,
    SingularCurveError,
    WeierstrassCurve,
    conductor,
    factor,
    integral_points,
    is_minimal,
    local_data,
    minimal_model,
    non_torsion_certificate,
    point,
    quadratic_twist,
    torsion,
    twist_detect,
    valuation,
)

E = WeierstrassCurve(0, 0, 0, -75, 74)
E264 = WeierstrassCurve(0, 1, 0, -8, 0)

# standard curves with known conductors
CONDUCTORS = [
    ((0, -1, 1, -10, -20), 11),
    ((1, 1, 1, -10, -10), 15),
    ((1, 0, 1, 4, -6), 14),
    ((0, 1, 1, -9, -15), 19),
    ((0, 1, 0, 4, 4), 20),
    ((0, -1, 0, -4, 4), 24),
    ((1, 0, 1, -5, -8), 26),
    ((0, 0, 1, 0, -7), 27),
    ((0, 0, 0, -1, 0), 32),
    ((0, 0, 0, 0, 1), 36),
    ((0, 0, 1, -1, 0), 37),
    ((0, 0, 0, 1, 0), 64),
    ((0, 0, 0, -4, 0), 64),
    ((0, 1, 0, -8, 0), 264),
    ((0, 0, 0, -75, 74), 1584),
]

curves = st.tuples(*[st.integers(-6, 6) for _ in range(5)]).map(lambda a: a)


def nonsingular(a):
    try:
        return WeierstrassCurve(*a)
    except SingularCurveError:
        return None


# -- examples -----------------------------------------------------------------


def test_invariants_of_e():
    assert (E.c4, E.c6, E.discriminant) == (3600, -63936, 24634368)
    assert factor(E.discriminant) == {2: 10, 3: 7, 11: 1}
    assert E.discriminant == -16 * (4 * (-75) ** 3 + 27 * 74**2)
    assert E.j == Fraction(62500, 33)


def test_invariants_of_264():
    assert (E264.c4, E264.c6) == (400, -2368)
    assert E264.j == Fraction(62500, 33)
    assert WeierstrassCurve(0, 0, 0, 0, 1).j == 0


def test_singular_curve_rejected():
    with pytest.raises(SingularCurveError):
        WeierstrassCurve(0, 0, 0, 0, 0)


def test_group_law_examples():
    P = point(-5, 18)
    assert E.multiple(P, 2) == point(10, -18)
    assert E.multiple(P, 3) == point(Fraction(19, 25), Fraction(-522, 125))
    assert E.add(P, INFINITY) == P
    assert E.add(P, E.neg(P)) == INFINITY
    with pytest.raises(OffCurveError):
        E.add(point(0, 0), P)


def test_torsion_examples():
    T = torsion(E)
    assert T.structure == (2,) and T.generators == [point(1, 0)]
    T = torsion(E264)
    assert T.structure == (2,) and T.generators == [point(0, 0)]
    assert torsion(WeierstrassCurve(0, 0, 0, -1, 0)).structure == (2, 2)


def test_non_torsion_certificates():
    c = non_torsion_certificate(E, point(-5, 18))
    assert not c.torsion and c.n == 3
    assert c.multiple == point(Fraction(19, 25), Fraction(-522, 125))
    assert non_torsion_certificate(E, point(1, 0)).torsion
    assert non_torsion_certificate(E264, point(0, 0)).torsion


@pytest.mark.parametrize("ainvs,N", CONDUCTORS)
def test_conductor_table(ainvs, N):
    assert conductor(WeierstrassCurve(*ainvs))[0] == N


def test_conductor_exponents_of_e():
    N, data = conductor(E)
    assert N == 1584
    assert {d.p: d.fp for d in data} == {2: 4, 3: 2, 11: 1}
    assert all(d.p != 5 for d in data)


def test_minimal_model():
    assert is_minimal(E)
    scaled = WeierstrassCurve(0, 0, 0, -75 * 2**4, 74 * 2**6)
    assert minimal_model(scaled).ainvs == E.ainvs


def test_integral_points():
    pts = integral_points(E, 10**6)
    need = [(1, 0), (-5, 18), (-5, -18), (10, 18), (10, -18), (13, 36), (13, -36), (-7, 16), (-7, -16)]
    for x, y in need:
        assert point(x, y) in pts
    small = integral_points(E, 100)
    assert set(map(str, small)) <= set(map(str, pts))


def test_twists():
    assert twist_detect(E, E264) == 3
    assert twist_detect(E, E) == 1
    with pytest.raises(NotTwistsError):
        twist_detect(E, WeierstrassCurve(0, 0, 0, 0, 1))


# -- properties ---------------------------------------------------------------


@given(curves)
def test_discriminant_identity(a):
    W = nonsingular(a)
    assume(W is not None)
    assert 1728 * W.discriminant == W.c4**3 - W.c6**2
    assert 4 * W.b8 == W.b2 * W.b6 - W.b4**2


@settings(max_examples=30)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_associativity(i, j, k):
    P, T = point(-5, 18), point(1, 0)
    A = E.add(E.multiple(P, i), T)
    B = E.multiple(P, j)
    C = E.add(E.multiple(P, k), point(10, 18))
    assert E.add(E.add(A, B), C) == E.add(A, E.add(B, C))


@settings(max_examples=25)
@given(curves, st.sampled_from([-1, 2, 3, 5]))
def test_twist_preserves_j(a, d):
    W = nonsingular(a)
    assume(W is not None)
    assert quadratic_twist(W, d).j == W.j


@settings(max_examples=25)
@given(curves)
def test_multiplicative_criterion(a):
    W = nonsingular(a)
    assume(W is not None)
    W = minimal_model(W)
    for loc in local_data(W):
        mult = valuation(W.c4, loc.p) == 0 and valuation(W.discriminant, loc.p) > 0
        assert (loc.fp == 1) == mult
        assert (loc.fp == 0) == (loc.kind == "good")


@settings(max_examples=15)
@given(st.integers(-20, 20), st.integers(-20, 20))
def test_integral_points_on_curve_and_symmetric(A, B):
    assume(4 * A**3 + 27 * B**2 != 0)
    W = WeierstrassCurve.short(A, B)
    pts = integral_points(W, 500)
    for P in pts:
        assert W.contains(P)
        assert point(P.x, -P.y) in pts
