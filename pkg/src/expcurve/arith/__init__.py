"""Exact arithmetic kernel: Q, Q(i), sparse bivariate polynomials, rational functions."""

from .algorithms import gcd_field, is_squarefree, resultant, squarefree_decomposition, squarefree_part
from .bivariate import BivariatePolynomial, X, Y
from .numbers import I, GaussianRational, Rational, exact_div, format_coeff, parse_coeff
from .parse import ParseError, parse_polynomial, parse_rational
from .ratfunc import RationalFunction, compose_rational, poly_gcd, poly_resultant, prs_gcd, substitute
from .upoly import UPoly

X_VAR, Y_VAR = 0, 1


def derivative(f, var: int):
    """Partial derivative of a polynomial or rational function, reduced."""
    if isinstance(f, BivariatePolynomial):
        return RationalFunction(f.derivative(var))
    return RationalFunction._lift(f).derivative(var)


def content_primitive(p: BivariatePolynomial):
    return p.content_primitive()


__all__ = [
    "BivariatePolynomial",
    "GaussianRational",
    "I",
    "ParseError",
    "Rational",
    "RationalFunction",
    "UPoly",
    "X",
    "Y",
    "X_VAR",
    "Y_VAR",
    "compose_rational",
    "content_primitive",
    "derivative",
    "exact_div",
    "format_coeff",
    "gcd_field",
    "is_squarefree",
    "parse_coeff",
    "parse_polynomial",
    "parse_rational",
    "poly_gcd",
    "poly_resultant",
    "prs_gcd",
    "resultant",
    "squarefree_decomposition",
    "squarefree_part",
    "substitute",
]
