"""Exact local data: translation to a point, tangent cones, projective charts."""

from __future__ import annotations

from ..arith import BivariatePolynomial, GaussianRational
from ..arith.algorithms import is_squarefree
from ..arith.upoly import UPoly


def binary_form_roots_poly(L: BivariatePolynomial) -> tuple[UPoly, int]:
    """Dehomogenize a binary form: L(x, y) -> (L(t, 1), multiplicity of the root y = 0).

    The second entry counts the factor y, i.e. the point (1 : 0) of the form.
    """
    d = L.degree
    p = UPoly([L.coeff(i, d - i) for i in range(d + 1)])
    return p, d - p.degree


def binary_form_squarefree(L: BivariatePolynomial) -> bool:
    """True when the homogeneous form L has d distinct linear factors over C."""
    p, at_infinity = binary_form_roots_poly(L)
    if at_infinity > 1:
        return False
    if p.degree <= 0:
        return True
    return is_squarefree(p)


def multiplicity(F: BivariatePolynomial) -> int:
    """Multiplicity of F at the origin (0 if F(0,0) != 0)."""
    if F.constant_term():
        return 0
    return F.order()


def at_point(F: BivariatePolynomial, x0, y0) -> BivariatePolynomial:
    """F translated so that (x0, y0) becomes the origin."""
    if x0 == 0 and y0 == 0:
        return F
    return F.translate(x0, y0)


def homogeneous_terms(F: BivariatePolynomial):
    d = F.degree
    for (i, j), c in F.terms.items():
        yield i, j, d - i - j, c


def chart(F: BivariatePolynomial, drop: str) -> BivariatePolynomial:
    """Affine chart of the projective closure.

    drop="y": set y = 1, result in (x, z).  drop="x": set x = 1, result in (y, z).
    """
    t = {}
    for i, j, k, c in homogeneous_terms(F):
        key = (i, k) if drop == "y" else (j, k)
        t[key] = t.get(key, 0) + c
    names = ("x", "z") if drop == "y" else ("y", "z")
    return BivariatePolynomial(t, names)


def circle_point_germ(F: BivariatePolynomial, sign: int = 1) -> BivariatePolynomial:
    """Germ of the projective closure at (sign*i : 1 : 0), moved to the origin of the (x, z) chart."""
    G = chart(F, "y")
    return G.translate(GaussianRational(0, sign), 0)


def tangent_cone(F: BivariatePolynomial) -> BivariatePolynomial:
    return F.lowest_form()


def is_ordinary(F: BivariatePolynomial) -> bool:
    """Origin is an ordinary point: tangent cone is a product of distinct lines."""
    if F.constant_term():
        return True
    return binary_form_squarefree(F.lowest_form())


def general_shear(F: BivariatePolynomial, start: int = 0) -> int:
    """Smallest k >= start with L(k, 1) != 0 for the tangent cone L, so that
    after x -> x + k*y the y-axis is not tangent to any branch at the origin."""
    L = F.lowest_form()
    k = start
    while L(k, 1) == 0:
        k += 1
    return k


def shear(F: BivariatePolynomial, k) -> BivariatePolynomial:
    """F(x + k*y, y)."""
    if k == 0:
        return F
    return F.linear_change(1, k, 0, 1)
