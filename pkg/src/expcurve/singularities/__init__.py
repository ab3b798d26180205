"""Local analysis of plane curve singularities and genus computation."""

from .analysis import (
    CertificationError,
    GenusReport,
    InconsistentInvariantsError,
    NotOnCurveError,
    ReducibilityDetectedError,
    SingularityReport,
    SingularLocus,
    certify_singular_locus,
    circle_point_check,
    delta_invariant,
    genus,
)
from .formulas import GENUS_TABLE, formula_discrepancies, genus_cn, genus_formula
from .local import is_ordinary, multiplicity, tangent_cone
from .milnor import MilnorResult, NonIsolatedSingularityError, milnor_number
from .puiseux import (
    DegenerateGermError,
    ExtensionUnsupportedError,
    GermExpansion,
    PuiseuxBranch,
    PuiseuxError,
    expand_germ,
    newton_puiseux,
)

__all__ = [
    "GENUS_TABLE",
    "CertificationError",
    "DegenerateGermError",
    "ExtensionUnsupportedError",
    "GenusReport",
    "GermExpansion",
    "InconsistentInvariantsError",
    "MilnorResult",
    "NonIsolatedSingularityError",
    "NotOnCurveError",
    "PuiseuxBranch",
    "PuiseuxError",
    "ReducibilityDetectedError",
    "SingularLocus",
    "SingularityReport",
    "certify_singular_locus",
    "circle_point_check",
    "delta_invariant",
    "expand_germ",
    "formula_discrepancies",
    "genus",
    "genus_cn",
    "genus_formula",
    "is_ordinary",
    "milnor_number",
    "multiplicity",
    "newton_puiseux",
    "tangent_cone",
]
