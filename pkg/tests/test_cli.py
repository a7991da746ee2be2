"""Command line, golden comparisons and survey records."""

import json
import subprocess
import sys

import pytest

from graphcurve.cli import main
from graphcurve.golden import compare_betti, compare_certificate, compare_golden, detect_kind
from graphcurve.graph import cycle_graph
from graphcurve.homology import BettiDiagram
from graphcurve.survey import regularity_conventions, run_survey, survey_graph

from conftest import data_path

GRAPH = str(data_path("theta443_graph.json"))
LABELING = str(data_path("theta443_labeling.json"))


def run(argv, capsys):
    rc = main(argv)
    out, err = capsys.readouterr()
    return rc, out, err


# golden ---------------------------------------------------------------------

def test_perturbed_golden_reports_located_cell():
    text = data_path("theta443_curve_betti.txt").read_text()
    B = BettiDiagram.from_text(text)
    bad = text.replace(" 70 ", " 71 ")
    diff = compare_betti(B, bad)
    assert not diff.match
    assert diff.differences == [{"row": 1, "column": 5, "expected": 71, "actual": 70}]
    assert compare_betti(B, text).match


def test_golden_kind_detection(tmp_path):
    assert detect_kind(data_path("theta443_curve_betti.txt").read_text()) == "betti"
    assert detect_kind(data_path("theta443_certificate.json").read_text()) == "certificate"
    assert detect_kind(data_path("theta443_curve_generators.txt").read_text()) == "ideal"
    cert = json.loads(data_path("theta443_certificate.json").read_text())
    flipped = [dict(c, status="FAIL") if c["check"] == "membership" else c for c in cert]
    diff = compare_certificate(flipped, json.dumps(cert))
    assert diff.differences == [{"check": "membership", "expected": "PASS", "actual": "FAIL"}]
    with pytest.raises(ValueError):
        compare_golden([], data_path("theta443_curve_generators.txt"))


# command line ---------------------------------------------------------------

def test_validate(capsys, tmp_path):
    rc, out, _ = run(["validate", "--graph", GRAPH, "--format", "json"], capsys)
    assert rc == 0 and json.loads(out)["ok"]
    tri = tmp_path / "tri.json"
    tri.write_text(json.dumps(cycle_graph(3).to_json()))
    rc, out, _ = run(["validate", "--graph", str(tri)], capsys)
    assert rc == 2
    rc, _, _ = run(["validate", "--graph", str(tri), "--allow-violations"], capsys)
    assert rc == 0


def test_invalid_input_exit_codes(capsys, tmp_path):
    rc, _, err = run(["embed", "--graph", str(tmp_path / "missing.json")], capsys)
    assert rc == 2 and json.loads(err)["error"] == "invalid_input"
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    rc, _, _ = run(["ideal", "--graph", str(bad)], capsys)
    assert rc == 2
    rc, _, _ = run(["nonsense"], capsys)
    assert rc == 2
    rc, _, err = run(["betti", "--graph", GRAPH, "--field", "0"], capsys)
    assert rc == 2


def test_certificate_failure_exit_code(capsys, tmp_path):
    tri = tmp_path / "tri.json"
    tri.write_text(json.dumps(cycle_graph(3).to_json()))
    rc, out, _ = run(["ideal", "--graph", str(tri), "--allow-violations", "--format", "json"], capsys)
    assert rc == 3
    assert any(c["status"] == "FAIL" for c in json.loads(out)["certificate"])


def test_embed_and_ideal(capsys):
    rc, out, _ = run(["embed", "--graph", GRAPH, "--labeling", LABELING, "--format", "json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["ambient_dim"] == 8 and doc["line_ideals"]["2"] == "x0-x6, x1, x2, x3, x4, x5, x7"
    rc, out, err = run(["ideal", "--graph", GRAPH, "--labeling", LABELING, "--source", "both",
                        "--golden", str(data_path("theta443_curve_generators.txt"))], capsys)
    assert rc == 0 and json.loads(err)["golden"]["match"]
    assert "x7*x3 - x7*x4" in out or "x3*x7 - x4*x7" in out


def test_betti_golden(capsys, tmp_path):
    argv = ["betti", "--graph", GRAPH, "--labeling", LABELING,
            "--golden", str(data_path("theta443_curve_betti.txt"))]
    rc, out, err = run(argv, capsys)
    assert rc == 0 and "total: 1 26 98 168 154 72 15 2" in out
    bad = tmp_path / "bad.txt"
    bad.write_text(data_path("theta443_curve_betti.txt").read_text().replace(" 70 ", " 71 "))
    rc, _, err = run(argv[:-1] + [str(bad)], capsys)
    assert rc == 1
    assert json.loads(err)["golden"]["differences"][0]["column"] == 5


def test_secant_command(capsys):
    rc, out, err = run(["secant", "--graph", GRAPH, "--labeling", LABELING, "--format", "json",
                        "--golden", str(data_path("theta443_secant_betti.txt"))], capsys)
    assert rc == 0 and json.loads(err)["golden"]["match"]
    doc = json.loads(out)
    assert len(doc["ideal"]) == 25 and doc["degree"] == 34 and doc["acm"]
    rc, out, _ = run(["secant", "--graph", GRAPH, "--k", "4", "--format", "json"], capsys)
    assert rc == 0 and json.loads(out)["status"] == "fills ambient space"


def test_json_output_is_byte_identical(capsys):
    argv = ["survey", "--graph", GRAPH, "--no-secant"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_survey_random_family_via_subprocess():
    argv = [sys.executable, "-m", "graphcurve.cli", "survey", "--family", "random_valid",
            "--d", "12", "--g", "2", "--count", "20", "--seed", "7", "--no-secant"]
    out = subprocess.run(argv, capture_output=True, text=True, timeout=900)
    assert out.returncode == 0, out.stderr
    lines = out.stdout.splitlines()
    assert len(lines) == 20
    recs = [json.loads(line) for line in lines]
    assert all(r["certificate"]["status"] == "PASS" for r in recs)
    assert all(r["invariants"]["genus"] == 2 and r["graph"]["vertices"] == 12 for r in recs)


# survey ---------------------------------------------------------------------

def test_survey_record_for_reference_graph(theta):
    g, _ = theta
    rep = survey_graph(g)
    rec = rep.to_json()
    assert rec["certificate"]["status"] == "PASS"
    obs = rec["observations"]
    assert obs["curve_regularity_ok"] and obs["curve_acm"] and obs["curve_N2_fails"]
    assert obs["cycle_betti"] == {"beta": 2, "cycles": 2, "agree": True}
    assert obs["secant_degree_ok"] and obs["secant_acm"] and obs["secant_N3_fails"]
    assert rec["secant"]["regularity_conventions"] == {
        "coordinate_ring": 4, "ideal": 5, "max_generator_degree": 3}
    assert "timings" not in rec and "timings" in rep.to_json(with_timings=True)


def test_parallel_survey_preserves_order():
    graphs = [cycle_graph(n) for n in (4, 5, 6)]
    a = [r.dumps() for r in run_survey(graphs, jobs=1, secant=False)]
    b = [r.dumps() for r in run_survey(graphs, jobs=2, secant=False)]
    assert a == b


def test_regularity_conventions():
    B = BettiDiagram({(0, 0): 1, (1, 3): 4, (2, 6): 1})
    assert regularity_conventions(B) == {"coordinate_ring": 4, "ideal": 5, "max_generator_degree": 3}
