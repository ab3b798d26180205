import pytest

from expcurve.arith import X, Y
from expcurve.derivatives import curve_polynomial
from expcurve.satellite import derivative_curve, even_quotient, explore, pencil_jacobian


@pytest.mark.parametrize("n", [2, 3, 4])
def test_inverse_system_gives_c_n(n):
    assert derivative_curve("inverse", n) == curve_polynomial(0, n, check_irreducible=False).F


def test_order_must_be_positive():
    with pytest.raises(ValueError):
        derivative_curve("inverse", 0)


def test_inverse_square_third_derivative():
    C = derivative_curve("inverse-square", 3)
    assert C.degree == 12
    assert C == C.compose(-X, Y) == C.compose(X, -Y)
    H = even_quotient(C)
    assert H is not None and H.degree == 6


def test_even_quotient_rejects_odd():
    assert even_quotient(X**2 + X * Y) is None
    assert even_quotient(X**4 - 3 * Y**2) == X**2 - 3 * Y


def test_pencil_jacobian_recovers_c3_model():
    J = pencil_jacobian(curve_polynomial(0, 3, check_irreducible=False).F)
    assert J.model.ainvs == (0, 0, 0, -75, 74)
    assert J.conductor == 1584


def test_explore_reports_genus():
    rep = explore("inverse-square", 3, 1)
    d = rep.to_dict()
    # exploratory: the values are recorded, not compared with a published label
    assert d["degree"] == 12 and d["genus"] == 8
    assert d["even_quotient"]["genus"] == 1
    assert d["even_quotient"]["jacobian"]["conductor"] == 1507176
