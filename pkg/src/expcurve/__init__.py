"""Exact-arithmetic workbench for the plane curves attached to the partial
derivatives of exp(x/(x^2+y^2)): generation, singularities and genus,
birational reduction to a Weierstrass model, elliptic arithmetic, analytic
checks and plots."""

__version__ = "0.1.0"

from .arith import BivariatePolynomial, RationalFunction, parse_polynomial, parse_rational  # noqa: E402
from .derivatives import CurveRecord, curve_polynomial, mixed_prefactor, y_prefactor  # noqa: E402

__all__ = [
    "BivariatePolynomial",
    "CurveRecord",
    "RationalFunction",
    "__version__",
    "curve_polynomial",
    "mixed_prefactor",
    "parse_polynomial",
    "parse_rational",
    "y_prefactor",
]
