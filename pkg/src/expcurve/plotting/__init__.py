"""Real loci of the curves as polylines, SVG documents and PNG figures."""

from .contour import (
    DEFAULT_WINDOWS,
    GENERIC_WINDOW,
    REFINE,
    FloatPoly,
    PlotSpec,
    Polyline,
    default_window,
    distance_to,
    hausdorff,
    trace_real_locus,
    vertices,
)
from .svg import SvgStyle, emit_atlas, emit_svg

__all__ = [
    "DEFAULT_WINDOWS",
    "GENERIC_WINDOW",
    "REFINE",
    "FloatPoly",
    "PlotSpec",
    "Polyline",
    "SvgStyle",
    "default_window",
    "distance_to",
    "emit_atlas",
    "emit_svg",
    "hausdorff",
    "trace_real_locus",
    "vertices",
]
