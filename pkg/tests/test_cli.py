import json

import pytest

from scg.cli import main
from scg.corpus import corpus_dir


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_a1(capsys):
    code, out, _ = run(capsys, "analyze", str(corpus_dir() / "A1.graph"))
    assert code == 0
    assert "order 19958400 (A11 by order)" in out
    assert "intersection property fails" in out


def test_analyze_eleven_cell_json(capsys):
    code, out, _ = run(capsys, "analyze", str(corpus_dir() / "ELEVEN_CELL.graph"), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "analyze"
    e = data["entries"][0]
    assert e["type"] == [3, 5, 3] and e["ip"]["status"] == "holds"


def test_analyze_errors(capsys, tmp_path):
    empty = tmp_path / "empty.graph"
    empty.write_text("points 3\nrank 2\n")
    assert run(capsys, "analyze", str(empty))[0] == 2
    bad = tmp_path / "bad.graph"
    bad.write_text("points 3\nrank 2\nedge 1 9 0\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 3" in err
    nc = tmp_path / "nc.graph"
    nc.write_text("points 4\nrank 3\nedge 1 2 0\nedge 2 3 2\n")
    code, _, err = run(capsys, "analyze", str(nc))
    assert code == 2 and "commute" in err
    assert run(capsys, "analyze", str(tmp_path / "missing.graph"))[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify-corpus", "--cap", "0")[0] == 2
    assert run(capsys, "verify-corpus", "--bogus")[0] == 2
    assert run(capsys, "verify-corpus", "Z1")[0] == 2


def test_verify_single_entry(capsys):
    code, out, _ = run(capsys, "verify-corpus", "A1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"version", "command", "entries", "summary"}
    assert [e["id"] for e in data["entries"]] == ["A1"]
    e = data["entries"][0]
    for key in ("id", "order", "ip", "type", "fracture", "pass"):
        assert key in e
    assert set(e["ip"]) == {"status", "witness", "method"}
    assert set(e["fracture"]) >= {"splits", "two_fracture"}
    assert json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n" == out


def test_verify_corrupted_corpus(capsys, tmp_path, monkeypatch):
    for p in corpus_dir().iterdir():
        if p.suffix in (".graph", ".json"):
            (tmp_path / p.name).write_text(p.read_text())
    a1 = tmp_path / "A1.graph"
    a1.write_text(a1.read_text().replace("edge 4 5 0\n", ""))
    monkeypatch.setenv("SCG_CORPUS_DIR", str(tmp_path))
    code, out, _ = run(capsys, "verify-corpus", "A1", "A2")
    assert code == 1
    assert "FAIL A1" in out and "PASS A2" in out


def test_enumerate_s4(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "s4", "3", "--ip", "--up-to-duality", "--format", "json",
                       "--out", str(tmp_path))
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["classes"] == len(data["entries"]) == 2
    assert sorted(p.name for p in tmp_path.iterdir()) == ["class1.graph", "class2.graph", "report.json"]


def test_enumerate_custom_group_and_budget(capsys, tmp_path):
    f = tmp_path / "s3.gens"
    f.write_text("degree 3\n(1,2)\n(1,2,3)\n")
    code, out, _ = run(capsys, "enumerate", str(f), "2", "--ip")
    assert code == 0 and "1 classes" in out
    assert run(capsys, "enumerate", "s4", "3", "--budget", "5")[0] == 3
    assert run(capsys, "enumerate", "nosuch", "3")[0] == 2


def test_enumerate_m11(capsys):
    code, out, _ = run(capsys, "enumerate", "m11", "3", "--ip", "--conjugacy-reduction", "--format", "json")
    assert code == 0
    assert json.loads(out)["summary"]["classes"] == 0


def test_dump_corpus(capsys, tmp_path):
    code, out, _ = run(capsys, "dump-corpus", "A1")
    assert code == 0 and out.startswith("# A1\npoints 11\nrank 4\n")
    assert run(capsys, "dump-corpus", "--out", str(tmp_path))[0] == 0
    assert len(list(tmp_path.glob("*.graph"))) == 61


@pytest.mark.parametrize("argv", [["-h"], ["analyze", "-h"]])
def test_help_exits_zero(capsys, argv):
    assert run(capsys, *argv)[0] == 0
