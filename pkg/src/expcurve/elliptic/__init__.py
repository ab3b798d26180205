"""Elliptic curves over Q: invariants, group law, torsion, Tate's algorithm, integral points, twists."""

from .arithmetic import (
    MAZUR_BOUND,
    NonTorsionCertificate,
    NotTwistsError,
    TorsionGroup,
    integral_points,
    non_torsion_certificate,
    quadratic_twist,
    squarefree_part,
    torsion,
    twist_detect,
)
from .curve import INFINITY, CurvePoint, OffCurveError, SingularCurveError, WeierstrassCurve, point
from .tate import LocalReduction, conductor, factor, is_minimal, local_data, minimal_model, reduce_model, tate, valuation

__all__ = [
    "INFINITY",
    "MAZUR_BOUND",
    "CurvePoint",
    "LocalReduction",
    "NonTorsionCertificate",
    "NotTwistsError",
    "OffCurveError",
    "SingularCurveError",
    "TorsionGroup",
    "WeierstrassCurve",
    "conductor",
    "factor",
    "integral_points",
    "is_minimal",
    "local_data",
    "minimal_model",
    "non_torsion_certificate",
    "point",
    "quadratic_twist",
    "reduce_model",
    "squarefree_part",
    "tate",
    "torsion",
    "twist_detect",
    "valuation",
]
