import json
import subprocess
import sys

import jsonschema
import pytest

from symmetrize.cli import main
from symmetrize.report import document, load_schema, to_csv, to_json, to_text
from symmetrize.scenarios import Check, ScenarioReport


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "symmetrize.cli", *args], capture_output=True, text=True
    )


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "golden-house" in out and "random-suite" in out


def test_run_json_validates_against_schema(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["run", "simplex-means", "kgon-omega", "--param", "n=2", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, load_schema())
    assert doc["passed"] is True
    assert [r["scenario"] for r in doc["reports"]] == ["kgon-omega", "simplex-means"]
    assert "wall_time" not in doc["reports"][0]


def test_timing_flag_adds_wall_time(tmp_path):
    out = tmp_path / "r.json"
    assert main(["run", "kgon-omega", "--format", "json", "--timing", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, load_schema())
    assert doc["reports"][0]["wall_time"] >= 0


@pytest.mark.parametrize("fmt", ["json", "csv", "text"])
def test_byte_identical_output(tmp_path, fmt):
    paths = [tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"]
    for p in paths:
        args = ["run", "random-suite", "diameters", "--param", "count=3", "--seed", "3", "--format", fmt, "--out", str(p)]
        assert main(args) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_parallel_jobs_match_serial(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    common = ["run", "kgon-omega", "nonopt-omega", "stability", "--format", "json"]
    assert main(common + ["--out", str(a)]) == 0
    assert main(common + ["--jobs", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_exit_codes():
    assert run_cli("run", "kgon-omega").returncode == 0
    bad = run_cli("run", "no-such-scenario")
    assert bad.returncode == 2
    assert "UnknownScenario" in bad.stderr
    assert run_cli("run", "simplex-means", "--param", "n=x").returncode == 2
    assert run_cli("run", "kgon-omega", "--out", "/nonexistent/dir/r.txt").returncode == 2


def test_failing_report_exits_one_and_cites_claim(capsys, monkeypatch):
    import symmetrize.cli as cli

    def fake(job):
        r = ScenarioReport("kgon-omega", "odd regular polygons", "a claim statement", {})
        r.checks.append(Check("x", 1, 2, "==", "claim", None, False))
        return r

    monkeypatch.setattr(cli, "_run_one", fake)
    assert main(["run", "kgon-omega"]) == 1
    out = capsys.readouterr().out
    assert "FAIL kgon-omega [odd regular polygons]" in out
    assert "claim: a claim statement" in out


def test_empty_documents():
    doc = document([])
    jsonschema.validate(doc, load_schema())
    assert doc["passed"] is True and doc["reports"] == []
    assert json.loads(to_json([])) == doc
    assert to_csv([]).startswith("scenario,claim,check")
    assert to_text([]) == "0/0 scenarios passed\n"


def test_body_command(capsys):
    assert main(["body", "simplex_cap:n=2,s=3/2"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["dim"] == 2 and len(body["vertices"]) == 6
    assert main(["body", "regular_kgon", "--param", "k=5", "--representation", "halfspaces"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert len(body["halfspaces"]) == 5
    assert main(["body", "regular_kgon", "--param", "k=4"]) == 2
    assert main(["body", "nothing"]) == 2
    assert main(["body", "simplex_cap:n=2"]) == 2


def test_body_round_trips_through_polytope_json(capsys):
    from symmetrize.constructions import simplex_cap
    from symmetrize.polytope import Polytope

    main(["body", "simplex_cap:n=2,s=3/2"])
    P = Polytope.from_json(json.loads(capsys.readouterr().out))
    assert P == simplex_cap(2, "3/2")


def test_plot_data(capsys):
    assert main(["plot-data", "--grid", "1,3/2,1.9"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("s,alpha_low,alpha_measured,alpha_high_bound")
    assert lines[1].split(",")[:4] == ["1", "1", "1", "1"]
    row = dict(zip(lines[0].split(","), lines[2].split(",")))
    assert row["alpha_low"] == "4/5" and row["beta_low"] == "24/25"
    assert main(["plot-data", "--grid", "3"]) == 2
