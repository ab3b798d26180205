import json
import os
import stat
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from expcurve import cli
from expcurve.cache import CurveCache, atomic_write
from expcurve.schemas import validate


@pytest.fixture
def run(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("EXPCURVE_CACHE", str(tmp_path / "cache"))

    def _run(*argv):
        code = cli.main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def test_gen(run, tmp_path):
    code, out, _ = run("gen", "0", "3")
    assert code == 0
    d = json.loads(out)
    validate("curve_record", d)
    assert d["degree"] == 6
    assert (tmp_path / "cache" / "curve_a0_b3.json").exists()
    code, out, _ = run("gen", "2", "0")
    assert json.loads(out)["degree"] == 5


def test_gen_no_curve(run):
    code, _, err = run("gen", "0", "0")
    assert code == 2 and "no curve" in err


def test_usage_error_from_argparse(run):
    with pytest.raises(SystemExit) as e:
        run("gen", "x", "1")
    assert e.value.code == 2


def test_genus_both(run):
    code, out, err = run("genus", "0", "3", "both")
    assert code == 0
    d = json.loads(out)
    validate("genus_report", d)
    assert d["genus"] == d["formula"] == 1
    code, out, err = run("genus", "1", "2", "both")
    assert code == 0 and json.loads(out)["genus"] == 3
    assert "WARN" in err


def test_genus_formula_text(run):
    code, out, _ = run("--format", "text", "genus", "5", "5", "formula")
    assert code == 0 and out.strip().endswith("88")


def test_genus_mismatch_exit_code(run, monkeypatch):
    import expcurve.singularities as sing

    monkeypatch.setattr(sing, "genus_formula", lambda a, b: 99)
    code, _, err = run("genus", "0", "3", "both")
    assert code == 3 and "mismatch" in err


def test_internal_exit_code(run, monkeypatch):
    import expcurve.birational as bir

    def boom(strict=True):
        raise ArithmeticError("forced")

    monkeypatch.setattr(bir, "c3_pipeline", boom)
    code, _, err = run("pipeline")
    assert code == 4 and "forced" in err


def test_singular(run):
    code, out, _ = run("singular", "0", "3")
    assert code == 0
    d = json.loads(out)
    validate("singular_locus", d)
    origin = [r for r in d["reports"] if r["point"] == "origin"][0]
    assert (origin["mult"], origin["r"], origin["mu"], origin["delta"]) == (4, 3, 12, 7)


def test_pipeline(run):
    code, out, _ = run("pipeline")
    assert code == 0
    d = json.loads(out)
    validate("pipeline", d)
    assert d["weierstrass"] == [0, 0, 0, -75, 74] and d["pass"]


@pytest.mark.parametrize(
    "op,extra,key,value",
    [
        ("conductor", (), "conductor", 1584),
        ("twist", ("--other", "[0,1,0,-8,0]"), "twist", 3),
    ],
)
def test_elliptic(run, op, extra, key, value):
    code, out, _ = run("elliptic", "[0,0,0,-75,74]", op, *extra)
    assert code == 0
    d = json.loads(out)
    validate("elliptic", d)
    assert d["result"][key] == value


def test_elliptic_bad_curve(run):
    code, _, _ = run("elliptic", "[0,0,0,0,0]", "invariants")
    assert code == 2


def test_inflect_and_sweep(run):
    code, out, _ = run("inflect", "1/1000")
    assert code == 0 and json.loads(out)
    code, out, _ = run("--format", "csv", "inflect", "--sweep", "--points", "3")
    assert code == 0
    assert out.splitlines()[0] == "c,R_measured,R_predicted,L_measured,L_predicted,ratio,rel_error"
    assert len(out.splitlines()) == 4


def test_plot_svg_and_png(run, tmp_path):
    svg, png = tmp_path / "c3.svg", tmp_path / "c3.png"
    code, _, _ = run("plot", "0", "3", "--res", "80", "--out", str(svg), "--png", str(png))
    assert code == 0
    ET.fromstring(svg.read_text())
    assert png.read_bytes()[:4] == b"\x89PNG"
    code, out, _ = run("plot", "--curve", "E", "--res", "40")
    assert code == 0 and out.lstrip().startswith("<")


def test_plot_bad_window(run):
    code, _, _ = run("plot", "0", "3", "--window", "1,2,3")
    assert code == 2


def test_atlas(run, tmp_path):
    code, out, _ = run("atlas", "1", "2", "--svg", str(tmp_path / "atlas.svg"), "--res", "32")
    assert code == 0
    rows = json.loads(out)["curves"]
    assert {(r["a"], r["b"]) for r in rows} == {(0, 2), (1, 1), (1, 2)}
    ET.fromstring((tmp_path / "atlas.svg").read_text())


def test_satellite_no_genus(run):
    code, out, _ = run("satellite", "--system", "inverse", "--order", "3", "--no-genus")
    assert code == 0
    assert json.loads(out)["degree"] == 6


def test_cache_env_and_atomic_files(tmp_path, monkeypatch):
    monkeypatch.setenv("EXPCURVE_CACHE", str(tmp_path / "env"))
    c = CurveCache()
    rec = c.record(0, 2)
    path = c.path(0, 2)
    assert path.parent == tmp_path / "env"
    assert stat.S_IMODE(os.stat(path).st_mode) == 0o644
    assert c.load(0, 2).F == rec.F
    assert not [p for p in path.parent.iterdir() if p.name != path.name]


def test_atomic_write_replaces(tmp_path):
    p = tmp_path / "f.txt"
    atomic_write(p, "one")
    atomic_write(p, "two")
    assert p.read_text() == "two"
    assert [q.name for q in tmp_path.iterdir()] == ["f.txt"]


def test_deterministic_output(run):
    a = run("gen", "1", "1")[1]
    b = run("gen", "1", "1")[1]
    assert a == b


def test_module_entry_point(tmp_path):
    env = dict(os.environ, EXPCURVE_CACHE=str(tmp_path))
    r = subprocess.run(
        [sys.executable, "-m", "expcurve", "--format", "text", "genus", "0", "2", "formula"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert r.returncode == 0 and r.stdout.strip().endswith("0")
