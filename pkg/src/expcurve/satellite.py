"""Exploration of the satellite curves of other exponentials, e.g. e^{1/z^2}.

With phi = g e^S and g_1 = g, g_{n+1} = d g_n + g_n dS, the n-th derivative
is d^n phi = g_{n+1} e^S.  The curve of order n is the stripped numerator of
g_{n+1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import BivariatePolynomial, RationalFunction, UPoly, X, Y, squarefree_decomposition
from .derivatives import R2, R2_SQ, SatelliteSpec, satellite_curve, satellite_prefactor

SYSTEMS = {
    # S as a rational function; e^{1/z} has Re(1/z) = x/(x^2+y^2)
    "inverse": lambda: RationalFunction(X, R2),
    "inverse-square": lambda: RationalFunction(X**2 - Y**2, R2_SQ),
}


def derivative_curve(system: str, order: int, derivation: int = 1) -> BivariatePolynomial:
    """Curve attached to the ``order``-th derivative of e^S."""
    if order < 1:
        raise ValueError("order must be >= 1")
    S = SYSTEMS[system]()
    gs = satellite_prefactor(SatelliteSpec(RationalFunction(1), S, derivation, order + 1))
    return satellite_curve(gs[order])


def even_quotient(C: BivariatePolynomial) -> BivariatePolynomial | None:
    """H with C(x, y) = H(x^2, y^2), or None when C has an odd exponent."""
    if any(i % 2 or j % 2 for i, j in C.terms):
        return None
    return BivariatePolynomial({(i // 2, j // 2): c for (i, j), c in C.terms.items()}, C.vars)


@dataclass
class PencilJacobian:
    """Jacobian of y^2 = q(m), where q is the odd part of the pencil discriminant."""

    quartic: UPoly
    I: Fraction
    J: Fraction
    j: Fraction
    model: object
    conductor: int
    torsion: str

    def to_dict(self) -> dict:
        return {
            "quartic": str(self.quartic),
            "I": str(self.I),
            "J": str(self.J),
            "j": str(self.j),
            "minimal_model": str(self.model),
            "conductor": self.conductor,
            "torsion": self.torsion,
        }


def pencil_jacobian(H: BivariatePolynomial) -> PencilJacobian:
    """For a curve with a point of multiplicity deg - 2 at the origin, lines
    y = m x cut a quadratic in x; its discriminant, with square factors
    removed, gives a genus-one double cover y^2 = q(m) birational to H."""
    from .birational import BinaryQuartic, quartic_invariants, slice_discriminant, slice_pencil
    from .elliptic import WeierstrassCurve, conductor, minimal_model, torsion

    sl = slice_pencil(H)
    if sl.degree != 2:
        raise ValueError(f"the pencil through the origin cuts degree {sl.degree}, not 2")
    D = slice_discriminant(sl).polynomial
    q = UPoly([Fraction(D.lc())])
    for f, e in squarefree_decomposition(D):
        if e % 2:
            q = q * f
    if q.degree not in (3, 4):
        raise ValueError(f"odd part of the discriminant has degree {q.degree}")
    inv = quartic_invariants(BinaryQuartic.from_upoly(q))
    # clear denominators by scaling x by u^2 and y by u^3
    u = 1
    while (-27 * inv.I * u**4).denominator != 1 or (-27 * inv.J * u**6).denominator != 1:
        u += 1
    W = minimal_model(WeierstrassCurve(0, 0, 0, int(-27 * inv.I * u**4), int(-27 * inv.J * u**6)))
    return PencilJacobian(q, inv.I, inv.J, inv.j, W, conductor(W)[0], str(torsion(W)))


@dataclass
class SatelliteReport:
    system: str
    order: int
    derivation: str
    curve: BivariatePolynomial
    genus: int | None = None
    quotient: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "order": self.order,
            "derivation": self.derivation,
            "degree": self.curve.degree,
            "polynomial": str(self.curve),
            "genus": self.genus,
            "even_quotient": self.quotient,
            "note": self.note,
        }


def explore(system: str = "inverse-square", order: int = 3, derivation: int = 1, seed: int = 0) -> SatelliteReport:
    """Curve of the given derivative, its genus, and the genus of its (x^2, y^2)
    quotient, with the pencil Jacobian when that quotient has genus one."""
    from .singularities import genus

    C = derivative_curve(system, order, derivation)
    rep = SatelliteReport(system, order, "xy"[derivation], C)
    try:
        rep.genus = genus(C, seed).genus
    except ArithmeticError as e:
        # e.g. a non-isolated singularity when the curve is not reduced
        rep.note = f"genus not computed: {type(e).__name__}: {e}"
    H = even_quotient(C)
    if H is not None:
        try:
            gH = genus(H, seed).genus
        except (ArithmeticError, ValueError) as e:
            rep.quotient = {"degree": H.degree, "polynomial": str(H), "genus": None, "error": str(e)}
            return rep
        rep.quotient = {"degree": H.degree, "polynomial": str(H), "genus": gH}
        if gH == 1:
            try:
                rep.quotient["jacobian"] = pencil_jacobian(H).to_dict()
            except ValueError as e:
                rep.quotient["jacobian"] = {"error": str(e)}
    return rep


__all__ = [
    "PencilJacobian",
    "SYSTEMS",
    "SatelliteReport",
    "derivative_curve",
    "even_quotient",
    "explore",
    "pencil_jacobian",
]
