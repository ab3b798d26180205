"""Command-line entry point: ``expcurve <subcommand> ...``.

Exit codes: 0 pass, 2 usage error, 3 verification mismatch, 4 internal
inconsistency.  Structured output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cache import CurveCache, atomic_write

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    cache_dir: Path
    fmt: str = "json"
    bound: int = 10**6
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        if self.bound < 1:
            raise UsageError("--bound must be >= 1")


# -- output helpers ------------------------------------------------------------


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, Path):
        return str(o)
    if isinstance(o, tuple):
        return list(o)
    return str(o)


def emit(obj, cfg: Config, schema: str | None = None, text: str | None = None) -> None:
    if schema is not None:
        from .schemas import validate

        validate(schema, json.loads(json.dumps(obj, default=_json_default)))
    if cfg.fmt == "text" and text is not None:
        sys.stdout.write(text.rstrip("\n") + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=1, default=_json_default, sort_keys=False) + "\n")


def _parse_point(s: str) -> tuple:
    try:
        parts = [Fraction(p.strip()) for p in s.strip("()").split(",")]
    except ValueError as e:
        raise UsageError(f"bad point {s!r}") from e
    if len(parts) != 2:
        raise UsageError(f"a point needs two coordinates, got {s!r}")
    return tuple(parts)


def _parse_window(s: str | None):
    if s is None:
        return None
    try:
        w = tuple(float(v) for v in s.split(","))
    except ValueError as e:
        raise UsageError(f"bad window {s!r}") from e
    if len(w) != 4:
        raise UsageError("--window takes xmin,xmax,ymin,ymax")
    return w


def _curve(cfg: Config, a: int, b: int):
    from .derivatives import NoCurveError, ReduciblePrefactorError

    try:
        return CurveCache(cfg.cache_dir).record(a, b)
    except (NoCurveError, ReduciblePrefactorError, ValueError) as e:
        raise UsageError(str(e)) from e


# -- subcommands ----------------------------------------------------------------


def cmd_gen(args, cfg: Config) -> int:
    rec = _curve(cfg, args.a, args.b)
    d = rec.to_dict()
    d["text"] = str(rec.F)
    emit(d, cfg, "curve_record", f"F_{args.a}{args.b} (degree {rec.degree}) = {rec.F}")
    return EXIT_OK


def cmd_genus(args, cfg: Config) -> int:
    from .singularities import GENUS_TABLE, InconsistentInvariantsError, formula_discrepancies, genus, genus_formula

    a, b = args.a, args.b
    cache = CurveCache(cfg.cache_dir)
    rec = _curve(cfg, a, b)
    out = {"a": a, "b": b, "degree": rec.degree, "method": args.method, "singularities": []}
    formula = None
    if args.method in ("formula", "both"):
        try:
            formula = genus_formula(a, b)
        except ValueError as e:
            raise UsageError(str(e)) from e
        warnings = formula_discrepancies(a, b)
        for w in warnings:
            print(
                f"WARN: published {w['formula']} formula gives {w['printed']}, corrected value {w['corrected']}",
                file=sys.stderr,
            )
        out["formula"] = formula
        out["warnings"] = warnings
        out["genus"] = formula
        rec.genus_formula = formula
    if args.method in ("singular", "both"):
        try:
            rep = genus(rec.F, cfg.seed, a, b)
        except InconsistentInvariantsError as e:
            print(f"internal inconsistency: {e}", file=sys.stderr)
            return EXIT_INTERNAL
        out.update({k: v for k, v in rep.to_dict().items() if k in ("genus", "singularities")})
        rec.genus_computed = rep.genus
    cache.store(rec)
    text = f"genus(C_{a}{b}) = {out['genus']}"
    if args.method == "both":
        text = f"genus(C_{a}{b}): formula {formula}, singularities {out['genus']}"
        if formula != out["genus"]:
            emit(out, cfg, "genus_report", text)
            print(f"mismatch: formula {formula} vs singularity analysis {out['genus']}", file=sys.stderr)
            return EXIT_MISMATCH
        text = f"{formula} = {out['genus']}"
    table = GENUS_TABLE.get((a, b))
    if table is not None and out["genus"] != table:
        print(f"mismatch with the genus table value {table}", file=sys.stderr)
        emit(out, cfg, "genus_report", text)
        return EXIT_MISMATCH
    emit(out, cfg, "genus_report", text)
    return EXIT_OK


def cmd_singular(args, cfg: Config) -> int:
    from .singularities import CertificationError, certify_singular_locus, delta_invariant

    if args.point is not None:
        F = _curve(cfg, args.a, args.b).F
        rep = delta_invariant(F, _parse_point(args.point), cfg.seed)
        d = rep.to_dict(with_branches=True)
        emit(d, cfg, None, f"{rep.point}: mult {rep.multiplicity}, r {rep.r}, mu {rep.mu}, delta {rep.delta}")
        return EXIT_OK
    F = _curve(cfg, args.a, args.b).F
    try:
        locus = certify_singular_locus(F, cfg.seed)
    except CertificationError as e:
        print(f"certification failed: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    d = locus.to_dict()
    from .singularities import genus

    d["reports"] = [r.to_dict() for r in genus(F, cfg.seed, args.a, args.b).reports]
    lines = [f"affine: {', '.join(d['affine']) or 'none'}"]
    lines += [f"{r['point']}: mult {r['mult']}, r {r['r']}, mu {r['mu']}, delta {r['delta']}" for r in d["reports"]]
    emit(d, cfg, "singular_locus", "\n".join(lines))
    return EXIT_OK


def cmd_pipeline(args, cfg: Config) -> int:
    from .birational import c3_pipeline, transport_point

    rec = c3_pipeline(strict=False)
    d = rec.to_dict()
    d["transport"] = []
    for P in ((1, 0), (-5, 18), (10, 18), (-7, 16)):
        try:
            path = transport_point(P, "E", "C3", rec)
            d["transport"].append([[s, [str(c) for c in p]] for s, p in path])
        except ValueError as e:
            d["transport"].append({"point": list(P), "error": str(e)})
    lines = [f"{'PASS' if i.passed else 'FAIL'}  {i.name}" for i in rec.identities]
    lines.append(f"final curve {list(rec.weierstrass)}")
    emit(d, cfg, "pipeline", "\n".join(lines))
    return EXIT_OK if rec.passed else EXIT_MISMATCH


def cmd_elliptic(args, cfg: Config) -> int:
    from . import elliptic as ek

    try:
        W = ek.WeierstrassCurve.parse(args.curve)
    except ValueError as e:
        raise UsageError(str(e)) from e
    op = args.op
    if op == "invariants":
        res = W.invariants()
        text = ", ".join(f"{k} = {v}" for k, v in res.items())
    elif op in ("conductor", "local"):
        N, data = ek.conductor(W)
        res = {"conductor": N, "local": [d.to_dict() for d in data]}
        text = f"{N}" if op == "conductor" else "\n".join(
            f"p = {d.p}: {d.kodaira}, f = {d.fp}, v(disc) = {d.vdelta}" for d in data
        )
    elif op == "minimal":
        M = ek.minimal_model(W)
        res = {"minimal_model": str(M), "is_minimal": ek.is_minimal(W)}
        text = str(M)
    elif op == "torsion":
        T = ek.torsion(W)
        res = {"structure": str(T), "order": T.order, "generators": [p.to_list() for p in T.generators]}
        text = f"{T}" + (f" generated by {', '.join(str(p) for p in T.generators)}" if T.generators else "")
    elif op == "certificate":
        if not args.point:
            raise UsageError("certificate needs --point")
        P = ek.point(*_parse_point(args.point))
        if not W.contains(P):
            raise UsageError(f"{P} is not on {W}")
        c = ek.non_torsion_certificate(W, P)
        res = {"point": P.to_list(), "torsion": c.torsion, "n": c.n, "multiple": c.multiple.to_list(), "reason": c.reason}
        text = c.reason
    elif op == "integral-points":
        if W.a1 or W.a3:
            raise UsageError("integral-points needs a model with a1 = a3 = 0")
        pts = ek.integral_points(W, cfg.bound)
        res = {"bound": cfg.bound, "count": len(pts), "points": [p.to_list() for p in pts]}
        text = f"{len(pts)} points: " + ", ".join(str(p) for p in pts)
    elif op == "twist":
        if not args.other:
            raise UsageError("twist needs --other CURVE")
        V = ek.WeierstrassCurve.parse(args.other)
        try:
            d = ek.twist_detect(W, V)
        except ek.NotTwistsError as e:
            res, text = {"twist": None, "reason": str(e)}, f"not twists: {e}"
        else:
            res, text = {"twist": d}, f"d = {d}"
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(op)
    emit({"curve": str(W), "op": op, "result": res}, cfg, "elliptic", text)
    return EXIT_OK


def cmd_inflect(args, cfg: Config) -> int:
    from .analytic import inflection_roots, width_ratio, width_sweep, write_width_csv

    if args.sweep:
        import numpy as np

        cs = [float(c) for c in np.geomspace(args.cmin, args.cmax, args.points)]
        buf = io.StringIO()
        write_width_csv(width_sweep(cs), buf)
        sys.stdout.write(buf.getvalue())
        return EXIT_OK
    if args.c is None:
        raise UsageError("inflect needs c or --sweep")
    try:
        r = inflection_roots(Fraction(args.c))
    except ValueError as e:
        raise UsageError(str(e)) from e
    d = {"c": r.c, "roots": r.roots, "bisection": r.bisection, "double_root": r.double_root, "agreement": r.agreement}
    if r.c > 0:
        q = width_ratio(r.c)
        d["width_ratio"] = {"ratio": q.ratio, "predicted": q.predicted, "rel_error": q.rel_error}
    if cfg.fmt == "csv":
        sys.stdout.write("y\n" + "".join(f"{v!r}\n" for v in r.roots))
        return EXIT_OK
    emit(d, cfg, None, " ".join(repr(v) for v in r.roots))
    return EXIT_OK


_NAMED = {
    "G3": None,
    "Q": ("y^2 - (6*x^3+39*x^2+72*x+36)", ("x", "y")),
    "E": ("y^2 - (x^3-75*x+74)", ("x", "y")),
}


def _named_curve(name: str):
    from .arith import parse_polynomial
    from .birational import invert_curve
    from .derivatives import curve_polynomial

    if name == "G3":
        return invert_curve(curve_polynomial(0, 3, check_irreducible=False).F)
    text, vars = _NAMED[name]
    return parse_polynomial(text, vars)


def cmd_plot(args, cfg: Config) -> int:
    from .plotting import PlotSpec, SvgStyle, default_window, emit_svg, trace_real_locus

    if args.curve:
        if args.curve not in _NAMED:
            raise UsageError(f"unknown curve {args.curve!r}; choose from {sorted(_NAMED)}")
        name, F = args.curve, _named_curve(args.curve)
    else:
        if args.a is None or args.b is None:
            raise UsageError("plot needs a b or --curve")
        name, F = f"C{args.a}{args.b}", _curve(cfg, args.a, args.b).F
    window = _parse_window(args.window) or default_window(name)
    try:
        spec = PlotSpec(F, window, args.res, refine_origin=name.startswith("C"))
    except ValueError as e:
        raise UsageError(str(e)) from e
    lines = trace_real_locus(spec)
    svg = emit_svg(lines, spec.window, SvgStyle(title=name))
    if args.out:
        atomic_write(Path(args.out), svg)
        print(f"wrote {args.out} ({len(lines)} polylines)", file=sys.stderr)
    else:
        sys.stdout.write(svg)
    if args.png:
        from .plotting.figures import locus_png

        locus_png(lines, spec.window, args.png, name)
        print(f"wrote {args.png}", file=sys.stderr)
    return EXIT_OK


def cmd_atlas(args, cfg: Config) -> int:
    from .plotting import PlotSpec, SvgStyle, default_window, emit_atlas, trace_real_locus
    from .singularities import GENUS_TABLE, genus_formula

    cache = CurveCache(cfg.cache_dir)
    cells = [(a, b) for a in range(args.max_a + 1) for b in range(args.max_b + 1) if a + b >= 2]
    rows = []
    panels = []
    computed = {}
    if args.genus:
        from .verify import _pipeline_genus

        todo = []
        for a, b in cells:
            rec = cache.record(a, b)
            if rec.genus_computed is None:
                todo.append((a, b))
            else:
                computed[(a, b)] = rec.genus_computed
        if cfg.jobs > 1 and len(todo) > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(cfg.jobs) as ex:
                done = list(ex.map(_pipeline_genus, todo))
        else:
            done = [_pipeline_genus(ab) for ab in todo]
        for a, b, g, secs in done:
            computed[(a, b)] = g
            print(f"C_{a}{b}: genus {g} ({secs:.1f} s)", file=sys.stderr)
    status = EXIT_OK
    for a, b in cells:
        rec = cache.record(a, b)
        gf = genus_formula(a, b)
        rec.genus_formula = gf
        if (a, b) in computed:
            rec.genus_computed = computed[(a, b)]
        cache.store(rec)
        row = {"a": a, "b": b, "degree": rec.degree, "genus_formula": gf, "genus_table": GENUS_TABLE.get((a, b))}
        if args.genus:
            row["genus_computed"] = rec.genus_computed
            if rec.genus_computed != gf:
                status = EXIT_MISMATCH
        rows.append(row)
        if args.svg:
            spec = PlotSpec(rec.F, default_window(f"C{a}{b}"), args.res)
            panels.append((f"C{a}{b}  g={gf}", spec.window, trace_real_locus(spec)))
    if args.svg:
        atomic_write(Path(args.svg), emit_atlas(panels, args.max_b + 1, SvgStyle(width=200, height=200, title="atlas")))
        print(f"wrote {args.svg}", file=sys.stderr)
    text = "\n".join(
        f"C_{r['a']}{r['b']}: degree {r['degree']}, genus {r['genus_formula']}"
        + (f" (computed {r['genus_computed']})" if "genus_computed" in r else "")
        for r in rows
    )
    emit({"curves": rows}, cfg, None, text)
    return status


def cmd_satellite(args, cfg: Config) -> int:
    from .satellite import SYSTEMS, derivative_curve, explore

    if args.system not in SYSTEMS:
        raise UsageError(f"unknown system {args.system!r}")
    der = {"x": 0, "y": 1}[args.derivation]
    if args.no_genus:
        C = derivative_curve(args.system, args.order, der)
        d = {"system": args.system, "order": args.order, "derivation": args.derivation, "degree": C.degree, "polynomial": str(C)}
        emit(d, cfg, None, f"degree {C.degree}: {C}")
        return EXIT_OK
    rep = explore(args.system, args.order, der, cfg.seed)
    d = rep.to_dict()
    text = f"order {rep.order} curve: degree {rep.curve.degree}, genus {rep.genus}"
    if rep.quotient:
        text += f"; (x^2, y^2) quotient: degree {rep.quotient['degree']}, genus {rep.quotient['genus']}"
        jac = rep.quotient.get("jacobian")
        if jac and "conductor" in jac:
            text += f"; Jacobian {jac['minimal_model']}, conductor {jac['conductor']}"
    emit(d, cfg, None, text)
    return EXIT_OK


def cmd_paper(args, cfg: Config) -> int:
    from .verify import scoreboard

    t = time.perf_counter()
    board = scoreboard(
        max_sum=args.max_sum,
        jobs=cfg.jobs,
        cache=CurveCache(cfg.cache_dir),
        figures=args.figures,
    )
    d = board.to_dict()
    d["seconds"] = round(time.perf_counter() - t, 2)
    if cfg.fmt == "text":
        sys.stdout.write(board.text() + "\n")
        from .schemas import validate

        validate("scoreboard", d)
    else:
        emit(d, cfg, "scoreboard")
    for name in board.failures:
        print(f"FAIL: {name}", file=sys.stderr)
    return EXIT_OK if board.passed else EXIT_MISMATCH


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="expcurve", description="Exact workbench for the curves of exp(x/(x^2+y^2)).")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--cache", default=None, help="cache directory (default $EXPCURVE_CACHE or ./.expcurve)")
    p.add_argument("--format", dest="fmt", choices=("json", "text", "csv", "svg"), default="json")
    p.add_argument("--bound", type=int, default=10**6, help="integral point search bound")
    p.add_argument("--seed", type=int, default=0, help="seed for random shears")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for atlas and paper")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate F_ab")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("genus", help="genus of C_ab")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("method", nargs="?", choices=("formula", "singular", "both"), default="both")
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("singular", help="certified singular locus and local invariants")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("--point", help="analyse only this affine point, e.g. 0,0")
    s.set_defaults(func=cmd_singular)

    s = sub.add_parser("pipeline", help="C3 -> G3 -> Q -> E with exact identities")
    s.set_defaults(func=cmd_pipeline)

    s = sub.add_parser("elliptic", help="arithmetic of a Weierstrass curve [a1,a2,a3,a4,a6]")
    s.add_argument("curve")
    s.add_argument(
        "op",
        choices=("invariants", "conductor", "local", "minimal", "torsion", "certificate", "integral-points", "twist"),
    )
    s.add_argument("--point", help="x,y for certificate")
    s.add_argument("--other", help="second curve for twist")
    s.set_defaults(func=cmd_elliptic)

    s = sub.add_parser("inflect", help="real roots of F2(c, y) and widths")
    s.add_argument("c", nargs="?", help="x-coordinate, e.g. 1/1000 or -0.001")
    s.add_argument("--sweep", action="store_true", help="CSV width sweep")
    s.add_argument("--cmin", type=float, default=1e-5)
    s.add_argument("--cmax", type=float, default=1e-1)
    s.add_argument("--points", type=int, default=13)
    s.set_defaults(func=cmd_inflect)

    s = sub.add_parser("plot", help="SVG of a real locus")
    s.add_argument("a", type=int, nargs="?")
    s.add_argument("b", type=int, nargs="?")
    s.add_argument("--curve", help="named curve: G3, Q or E")
    s.add_argument("--window", help="xmin,xmax,ymin,ymax")
    s.add_argument("--res", type=int, default=240)
    s.add_argument("--out", help="SVG path (default stdout)")
    s.add_argument("--png", help="also render a PNG with matplotlib")
    s.set_defaults(func=cmd_plot)

    s = sub.add_parser("atlas", help="table and plots of C_ab for a <= max_a, b <= max_b")
    s.add_argument("max_a", type=int)
    s.add_argument("max_b", type=int)
    s.add_argument("--genus", action="store_true", help="also run the singularity genus computation")
    s.add_argument("--svg", help="write an SVG grid of the loci")
    s.add_argument("--res", type=int, default=120)
    s.set_defaults(func=cmd_atlas)

    s = sub.add_parser("satellite", help="curves of other exponentials (exploratory)")
    s.add_argument("--system", default="inverse-square", help="inverse or inverse-square")
    s.add_argument("--order", type=int, default=3, help="derivative order n")
    s.add_argument("--derivation", choices=("x", "y"), default="y")
    s.add_argument("--no-genus", action="store_true")
    s.set_defaults(func=cmd_satellite)

    s = sub.add_parser("paper", help="run every check and print a scoreboard")
    s.add_argument("--max-sum", type=int, default=5, help="largest a+b for the singularity genus check")
    s.add_argument("--figures", help="directory for PNG figures")
    s.set_defaults(func=cmd_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        cfg = Config(CurveCache(args.cache).root, args.fmt, args.bound, args.seed, args.jobs)
        return args.func(args, cfg)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
