"""The JSON document layer and the command line, end to end.

CLI tests run the installed module in a subprocess, so they exercise
argument parsing, exit codes, stdout/stderr framing, and file output
exactly as a user would see them.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from darkgallery.documents import (
    CertificateDocument,
    DocumentError,
    PlacementDocument,
    point_from_json,
    point_to_json,
    rat_from_json,
    rat_to_json,
    region_from_dict,
    region_to_dict,
    sampler_from_json,
    sampler_to_json,
)
from darkgallery.fixtures import builtin_fixture
from darkgallery.geometry import ConvexPolygon, Point2, SimplePolygon, Wedge

COMB_REGION = {
    "kind": "simple",
    "vertices": [[0, 0], [6, 0], [6, 2], [5, 10], [4, 2], [3, 10],
                 [2, 2], [1, 10], [0, 2]],
}


def run_cli(*argv, env=None, expect=0):
    proc = subprocess.run(
        [sys.executable, "-m", "darkgallery", *argv],
        capture_output=True, text=True,
        env=env if env is not None else dict(os.environ),
    )
    assert proc.returncode == expect, (
        "exit %d != %d\nargv: %r\nstdout: %s\nstderr: %s"
        % (proc.returncode, expect, argv, proc.stdout[:1500], proc.stderr[:1500]))
    return proc


@pytest.fixture(scope="module")
def work(tmp_path_factory):
    """Constructed placements for the three builtin shapes, built once."""
    root = tmp_path_factory.mktemp("cli")
    outputs = {}
    for shape, k in (("triangle", 9), ("square", 13), ("wedge", 3)):
        out = str(root / ("%s.json" % shape))
        proc = run_cli("construct", "--shape", shape, "--k", str(k),
                       "--out", out, "--format", "json")
        outputs[shape] = (out, proc.stdout)
    return root, outputs


# --- scalar and region codecs ------------------------------------------------

def test_rational_json_forms():
    assert rat_to_json(Fraction(4, 2)) == 2
    assert rat_to_json(Fraction(3, 2)) == "3/2"
    assert rat_to_json(-7) == -7
    assert rat_from_json("3/2") == Fraction(3, 2)
    assert rat_from_json("-3/2") == Fraction(-3, 2)
    assert rat_from_json(5) == 5
    for bad in (True, "3/0x", "1.5", [1, 2], None):
        with pytest.raises(DocumentError):
            rat_from_json(bad)


def test_point_codec():
    p = Point2(Fraction(1, 3), -4)
    assert point_to_json(p) == ["1/3", -4]
    assert point_from_json(["1/3", -4]) == p
    with pytest.raises(DocumentError):
        point_from_json([1, 2, 3])


def test_region_codecs_round_trip():
    regions = [
        ConvexPolygon([Point2(0, 0), Point2(4, 0), Point2(2, 4)]),
        SimplePolygon([Point2(0, 0), Point2(4, 0), Point2(4, 2), Point2(2, 2),
                       Point2(2, 4), Point2(0, 4)]),
        Wedge(Point2(1, 2), Point2(3, 1), Point2(-1, 2)),
    ]
    for region in regions:
        d = region_to_dict(region)
        back = region_from_dict(d)
        assert type(back) is type(region)
        assert region_to_dict(back) == d
    with pytest.raises(DocumentError):
        region_from_dict({"kind": "pentagram"})
    with pytest.raises(DocumentError):
        region_from_dict({"kind": "wedge", "apex": [0, 0]})


def test_sampler_codec_round_trips():
    specs = [
        None,
        ("grid", 16),
        ("random", 7, 50),
        ("points", (Point2(1, 2), Point2(Fraction(1, 2), 3))),
    ]
    for spec in specs:
        assert sampler_from_json(sampler_to_json(spec)) == spec
    assert sampler_to_json(("grid", 16)) == {"kind": "grid", "resolution": 16}
    with pytest.raises(DocumentError):
        sampler_from_json({"kind": "everywhere"})
    with pytest.raises(DocumentError):
        sampler_to_json(("everywhere",))


def test_placement_documents_are_immutable_and_comparable():
    region, guards = builtin_fixture("triangle")
    doc = PlacementDocument(region, guards, name="triangle")
    same = PlacementDocument.loads(doc.dumps())
    assert same == doc and hash(same) == hash(doc)
    with pytest.raises(AttributeError):
        doc.name = "other"
    with pytest.raises(DocumentError):
        PlacementDocument.loads("{}")
    with pytest.raises(DocumentError):
        PlacementDocument.loads("not json")


# --- construct ------------------------------------------------------------------

def test_construct_builtins(work):
    _, outputs = work
    for shape, expect_g, expect_depth in (
        ("triangle", 10, 9), ("square", 14, 13), ("wedge", 4, 3),
    ):
        out, stdout = outputs[shape]
        doc = json.loads(stdout)
        assert len(doc["placement"]["guards"]) == expect_g
        cert = doc["certificate"]
        assert cert["mode"] == "exact"
        assert cert["min_depth"] == expect_depth
        assert not any(r["found"] for r in cert["j_dark"])
        with open(out) as fh:
            assert fh.read() == stdout


def test_construct_is_reproducible(work):
    _, outputs = work
    proc = run_cli("construct", "--shape", "triangle", "--k", "9", "--format", "json")
    assert proc.stdout == outputs["triangle"][1]


def test_construct_files_keep_rationals_exact(work):
    _, outputs = work
    doc = PlacementDocument.loads(outputs["triangle"][1])
    assert any(isinstance(c, str) and "/" in c
               for g in json.loads(outputs["triangle"][1])["placement"]["guards"]
               for c in g)
    again = PlacementDocument.loads(doc.dumps())
    assert again == doc
    assert again.dumps() == doc.dumps()


def test_construct_on_a_simple_region_file(tmp_path):
    regfile = str(tmp_path / "comb.json")
    with open(regfile, "w") as fh:
        json.dump(COMB_REGION, fh)
    out = str(tmp_path / "comb-place.json")
    proc = run_cli("construct", "--shape", regfile, "--k", "2",
                   "--out", out, "--format", "json")
    doc = json.loads(proc.stdout)
    assert doc["certificate"]["mode"] == "sampled"
    assert doc["certificate"]["min_depth"] >= 2
    saved = PlacementDocument.load(out)
    assert PlacementDocument.loads(saved.dumps()) == saved


# --- verify -----------------------------------------------------------------------

def test_verify_fixtures_exactly():
    for name, expect_depth in (("triangle", 9), ("square", 13), ("wedge", 9)):
        proc = run_cli("verify", "--region", name, "--guards", name,
                       "--format", "json")
        cert = json.loads(proc.stdout)
        assert cert["mode"] == "exact"
        assert cert["min_depth"] == expect_depth
        assert cert["j_dark"] == [{"j": 2, "found": False, "witness": None}]
        parsed = CertificateDocument.loads(proc.stdout)
        assert parsed.dumps() == proc.stdout
        assert CertificateDocument.loads(parsed.dumps()) == parsed


def test_verify_flags_a_2_dark_perturbation(work, tmp_path):
    _, outputs = work
    placement = json.loads(outputs["square"][1])["placement"]
    guards = [list(g) for g in placement["guards"]]
    guards[0] = [-200, 150]  # onto the left edge guards' vertical line
    badfile = str(tmp_path / "square-bad.json")
    with open(badfile, "w") as fh:
        json.dump({"region": placement["region"], "guards": guards}, fh)
    proc = run_cli("verify", "--region", "square", "--guards", badfile,
                   "--format", "json", expect=2)
    cert = json.loads(proc.stdout)
    assert cert["j_dark"][0]["found"] is True
    assert cert["j_dark"][0]["witness"] is not None


def test_verify_depth_targets_drive_the_exit_code():
    run_cli("verify", "--region", "triangle", "--guards", "triangle",
            "--depth", "9", expect=0)
    run_cli("verify", "--region", "triangle", "--guards", "triangle",
            "--depth", "10", expect=2)


def test_exact_mode_is_refused_on_simple_polygons(tmp_path):
    regfile = str(tmp_path / "comb.json")
    with open(regfile, "w") as fh:
        json.dump(COMB_REGION, fh)
    proc = run_cli("verify", "--region", regfile, "--guards", "triangle",
                   "--mode", "exact", expect=1)
    err = json.loads(proc.stderr)
    assert "exact" in err["error"]


def test_sampled_verify_echoes_its_sampler(work, tmp_path):
    regfile = str(tmp_path / "comb.json")
    with open(regfile, "w") as fh:
        json.dump(COMB_REGION, fh)
    out = str(tmp_path / "place.json")
    run_cli("construct", "--shape", regfile, "--k", "2", "--out", out)
    proc = run_cli("verify", "--region", regfile, "--guards", out,
                   "--depth", "2", "--grid", "8", "--format", "json")
    cert = json.loads(proc.stdout)
    assert cert["mode"] == "sampled"
    assert cert["sampler"] == {"kind": "grid", "resolution": 8}
    assert cert["min_depth"] >= 2


# --- render -------------------------------------------------------------------------

def test_render_guards_only(work):
    root, outputs = work
    svg = str(root / "triangle.svg")
    run_cli("render", "--placement", outputs["triangle"][0], "--out", svg)
    text = open(svg).read()
    assert text.count("<circle") == 10
    assert "<line" not in text
    assert text.startswith("<svg")


def test_render_with_dark_rays(work):
    root, outputs = work
    svg = str(root / "square-rays.svg")
    run_cli("render", "--placement", outputs["square"][0], "--out", svg,
            "--show-dark-rays")
    text = open(svg).read()
    assert text.count("<circle") == 14
    assert text.count("<line") == 14 * 13


def test_render_zoom_window(work):
    root, _ = work
    region, guards = builtin_fixture("wedge")
    wfix = str(root / "wedge-fixture.json")
    PlacementDocument(region, guards, name="wedge").save(wfix)
    svg = str(root / "wedge-zoom.svg")
    run_cli("render", "--placement", wfix, "--out", svg,
            "--show-dark-rays", "--zoom=-50,150,50,250")
    text = open(svg).read()
    assert text.count("<line") == 10 * 9
    assert 'viewBox="0 0 640 640"' in text  # square window, square frame
    svg_b = str(root / "wedge-zoom-b.svg")
    run_cli("render", "--placement", wfix, "--out", svg_b,
            "--show-dark-rays", "--zoom=-50,150,50,250")
    assert open(svg_b).read() == text


# --- failure modes --------------------------------------------------------------------

def test_cli_error_paths():
    proc = run_cli("construct", "--shape", "nonesuch", "--k", "3", expect=1)
    assert "error" in json.loads(proc.stderr)
    run_cli("construct", "--shape", "triangle", "--k", "0", expect=1)
    run_cli("verify", "--region", "triangle", "--guards", "/nonexistent.json",
            expect=1)


def test_thread_cap_environment_variable():
    env = dict(os.environ, DARKGALLERY_THREADS="banana")
    proc = run_cli("verify", "--region", "triangle", "--guards", "triangle",
                   env=env, expect=1)
    assert "DARKGALLERY_THREADS" in json.loads(proc.stderr)["error"]
    env = dict(os.environ, DARKGALLERY_THREADS="4")
    run_cli("verify", "--region", "triangle", "--guards", "triangle", env=env)
