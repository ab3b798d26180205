import math
from fractions import Fraction
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, settings, strategies as st

from expcurve.arith import X, Y, parse_polynomial
from expcurve.derivatives import curve_polynomial
from expcurve.plotting import (
    FloatPoly,
    PlotSpec,
    SvgStyle,
    default_window,
    distance_to,
    emit_atlas,
    emit_svg,
    hausdorff,
    trace_real_locus,
    vertices,
)
from expcurve.verify import half_plane_split

SVG = "{http://www.w3.org/2000/svg}"
F2 = curve_polynomial(0, 2, check_irreducible=False).F
F3 = curve_polynomial(0, 3, check_irreducible=False).F


def corner_bound(f: FloatPoly, spec: PlotSpec, line, p):
    """max |F| over the corners of the grid cell of ``line`` containing p."""
    xmin, _, ymin, _ = spec.window
    hx, hy = line.cell
    i = math.floor((p[0] - xmin) / hx + 1e-9)
    j = math.floor((p[1] - ymin) / hy + 1e-9)
    best = 0.0
    for di in (-1, 0, 1, 2):
        for dj in (-1, 0, 1, 2):
            best = max(best, abs(f(xmin + (i + di) * hx, ymin + (j + dj) * hy)))
    return best


def test_plot_spec_validation():
    with pytest.raises(ValueError):
        PlotSpec(F3, (1, 0, 0, 1))
    with pytest.raises(ValueError):
        PlotSpec(F3, (0, 1, 0, 1), resolution=8)


def test_c3_loop_symmetry_and_halves():
    spec = PlotSpec(F3, default_window("C03"), 240)
    lines = trace_real_locus(spec)
    assert distance_to(lines, (-0.5, 0.0)) < 1e-2
    vs = vertices(lines)
    assert hausdorff(vs, [(x, -y) for x, y in vs]) < spec.cell[0]
    split = half_plane_split(lines, spec.cell[0])
    assert split["crossing"] == 0 and split["left"] > 0 and split["right"] > 0


def test_c3_on_unit_window():
    lines = trace_real_locus(PlotSpec(F3, (-1.0, 0.5, -1.0, 0.5), 150))
    assert distance_to(lines, (-0.5, 0.0)) < 1e-2


def test_c2_reaches_origin_from_both_sides():
    lines = trace_real_locus(PlotSpec(F2, default_window("C02"), 200))
    near = [p for p in vertices(lines) if math.hypot(*p) < 0.05]
    assert any(x < 0 for x, _ in near) and any(x > 0 for x, _ in near)


def test_missing_locus_is_empty():
    assert trace_real_locus(PlotSpec(X**2 + Y**2 - 1, (5, 6, 5, 6), 32)) == []


@pytest.mark.parametrize("name,F", [("C02", F2), ("C03", F3)])
def test_vertices_interpolation_consistent(name, F):
    spec = PlotSpec(F, default_window(name), 120)
    f = FloatPoly.from_poly(F)
    for ln in trace_real_locus(spec):
        for p in ln.points:
            assert abs(f(*p)) <= corner_bound(f, spec, ln, p) * (1 + 1e-9) + 1e-15


@settings(max_examples=15)
@given(st.integers(20, 90), st.integers(-30, 30), st.integers(-30, 30))
def test_doubling_keeps_components(r, cx, cy):
    r, cx, cy = Fraction(r, 100), Fraction(cx, 100), Fraction(cy, 100)
    F = (X - cx) ** 2 + (Y - cy) ** 2 - r * r
    w = (-1.5, 1.5, -1.5, 1.5)
    coarse = trace_real_locus(PlotSpec(F, w, 40, refine_origin=False))
    fine = trace_real_locus(PlotSpec(F, w, 80, refine_origin=False))
    h = 3.0 / 40
    big = [ln for ln in coarse if max(math.dist(ln.points[0], q) for q in ln.points) > 4 * h]
    assert big
    fv = vertices(fine)
    for ln in big:
        assert hausdorff(ln.points, [q for q in fv if distance_to([ln], q) < 2 * h]) < 2 * h


def test_svg_round_trip_and_determinism():
    spec = PlotSpec(F3, default_window("C03"), 100)
    a = emit_svg(trace_real_locus(spec), spec.window, SvgStyle(title="C03"))
    b = emit_svg(trace_real_locus(spec), spec.window, SvgStyle(title="C03"))
    assert a == b
    root = ET.fromstring(a)
    assert root.tag == SVG + "svg"
    assert root.get("version") == "1.1"
    paths = root.findall(f".//{SVG}path")
    assert len(paths) >= len(trace_real_locus(spec))


def test_empty_svg_has_axes_only():
    root = ET.fromstring(emit_svg([], (-1, 1, -1, 1)))
    assert root.findall(f".//{SVG}path") == []
    assert root.findall(f".//{SVG}line")


def test_atlas():
    panels = []
    for a, b in ((0, 2), (1, 1), (2, 0)):
        F = curve_polynomial(a, b, check_irreducible=False).F
        spec = PlotSpec(F, default_window(f"C{a}{b}"), 48)
        panels.append((f"C{a}{b}", spec.window, trace_real_locus(spec)))
    doc = emit_atlas(panels, 2)
    root = ET.fromstring(doc)
    assert len(root.findall(f".//{SVG}g")) >= 3
    assert doc == emit_atlas(panels, 2)


def test_png_figures(tmp_path):
    from expcurve.plotting.figures import locus_png

    spec = PlotSpec(F3, default_window("C03"), 80)
    out = locus_png(trace_real_locus(spec), spec.window, tmp_path / "c3.png", "C03", [(-0.5, 0.0, "P")])
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
